//------------------------------------------------------------------------------
//
//   Copyright 2026 The conefix Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#pragma once

#include <stdexcept>
#include <string>

namespace conefix {

class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Vectors of different dimension were combined or compared.
class DimensionMismatch : public Error
{
public:
  using Error::Error;
};

/// A point or a mapped image lies outside the domain it must belong to.
class DomainError : public Error
{
public:
  using Error::Error;
};

/// Arguments violate an operation's precondition (including theorem
/// hypotheses such as a + 2b < 1).
class PreconditionError : public Error
{
public:
  using Error::Error;
};

/// A solve started from a particular seed failed.
class SolveError : public Error
{
public:
  using Error::Error;
};

}  // namespace conefix

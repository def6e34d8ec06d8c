/* facecover: DNF minimization and lower-bound auditing for few-zero Boolean functions
 * Copyright (C) 2026  the facecover authors
 *
 * Permission is hereby granted, free of charge, to any person
 * obtaining a copy of this software and associated documentation
 * files (the "Software"), to deal in the Software without
 * restriction, including without limitation the rights to use,
 * copy, modify, merge, publish, distribute, sublicense, and/or sell
 * copies of the Software, and to permit persons to whom the
 * Software is furnished to do so, subject to the following
 * conditions:
 *
 * The above copyright notice and this permission notice shall be
 * included in all copies or substantial portions of the Software.
 *
 * THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND,
 * EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES
 * OF MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND
 * NONINFRINGEMENT. IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT
 * HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY,
 * WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
 * FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR
 * OTHER DEALINGS IN THE SOFTWARE.
 */

/*!
  \file error.hpp
  \brief Error kinds raised by the library
*/

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace facecover
{

enum class error_kind
{
  length_mismatch,
  index_out_of_range,
  invalid_argument,
  constant_column,
  not_proper,
  arity_mismatch,
  decomposition_hypothesis_fails,
  precondition_violated,
  resource_limit,
  io_error,
  malformed_row,
  duplicate_row
};

inline std::string_view to_string( error_kind kind )
{
  switch ( kind )
  {
  case error_kind::length_mismatch:
    return "LengthMismatch";
  case error_kind::index_out_of_range:
    return "IndexOutOfRange";
  case error_kind::invalid_argument:
    return "InvalidArgument";
  case error_kind::constant_column:
    return "ConstantColumn";
  case error_kind::not_proper:
    return "NotProper";
  case error_kind::arity_mismatch:
    return "ArityMismatch";
  case error_kind::decomposition_hypothesis_fails:
    return "DecompositionHypothesisFails";
  case error_kind::precondition_violated:
    return "PreconditionViolated";
  case error_kind::resource_limit:
    return "ResourceLimitExceeded";
  case error_kind::io_error:
    return "IoError";
  case error_kind::malformed_row:
    return "MalformedRow";
  case error_kind::duplicate_row:
    return "DuplicateRow";
  }
  return "Unknown";
}

class error : public std::runtime_error
{
public:
  error( error_kind kind, std::string const& message )
      : std::runtime_error( std::string( to_string( kind ) ) + ": " + message ),
        kind_( kind ),
        detail_( message )
  {
  }

  error_kind kind() const noexcept { return kind_; }
  std::string const& detail() const noexcept { return detail_; }

private:
  error_kind kind_;
  std::string detail_;
};

} // namespace facecover

/*
   Copyright 2026 The lefschetz authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef LEFSCHETZ_ERRORS_HPP
#define LEFSCHETZ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lefschetz {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Coefficient arithmetic.
struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& what = "division by zero") : Error(what) {}
};
struct MixedFields : Error {
    explicit MixedFields(const std::string& what = "operands belong to different fields") : Error(what) {}
};

// Polynomial layer.
struct ArityMismatch : Error {
    explicit ArityMismatch(const std::string& what = "exponent vectors have different arity") : Error(what) {}
};
struct RingMismatch : Error {
    explicit RingMismatch(const std::string& what = "polynomials belong to different rings") : Error(what) {}
};

// Quotient algebras and modules.
struct NotHomogeneous : Error {
    explicit NotHomogeneous(const std::string& what = "input is not homogeneous") : Error(what) {}
};
struct NotArtinian : Error {
    explicit NotArtinian(const std::string& what = "quotient is not Artinian") : Error(what) {}
};
struct DegreeMismatch : Error {
    explicit DegreeMismatch(const std::string& what = "graded degrees are inconsistent") : Error(what) {}
};
struct NotFiniteLength : Error {
    explicit NotFiniteLength(const std::string& what = "module does not have finite length") : Error(what) {}
};

// Locus construction.
struct DegreeOutOfRange : Error {
    explicit DegreeOutOfRange(const std::string& what = "degree outside the supported range") : Error(what) {}
};
struct MiddleModeUnjustified : Error {
    explicit MiddleModeUnjustified(const std::string& what = "middle-only mode requires a certificate") : Error(what) {}
};
struct NotDegreeTwo : Error {
    explicit NotDegreeTwo(const std::string& what = "conic must be homogeneous of degree 2") : Error(what) {}
};

// Text input.
struct ParseError : Error {
    int line;
    int column;
    ParseError(const std::string& what, int line_, int column_)
        : Error(what + " (line " + std::to_string(line_) + ", column " + std::to_string(column_) + ")"),
          line(line_), column(column_) {}
};

}  // namespace lefschetz

#endif  // LEFSCHETZ_ERRORS_HPP

/*
   Copyright 2026 the multcode authors

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

#pragma once

#include <iosfwd>
#include <string>

#include "multcode/mcode.hpp"

namespace multcode::io {

/// Malformed input file; the CLI maps this to exit code 2.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The mword/1 text format. All integers are ASCII decimals, lines end in
/// LF, values are canonical representatives in [0, p):
///
///   mword/1
///   p <prime>
///   m <dims>
///   s <order>
///   d <degree>
///   set <t_1> ... <t_n>        (m lines, strictly increasing values)
///   <record ...>               (n^m lines)
///
/// Each record carries the C(s+m-1, m) jet coefficients of one grid point
/// in graded-lex exponent order; records follow grid index order (first
/// coordinate most significant).
void write_word(std::ostream& os, const ReceivedWord& word);
ReceivedWord read_word(std::istream& is);

void write_word_file(const std::string& path, const ReceivedWord& word);
ReceivedWord read_word_file(const std::string& path);

/// Polynomial coefficient files: one "e_1 ... e_m value" line per nonzero
/// term. Blank lines and lines starting with '#' are ignored on input;
/// output is canonical (graded-lex order, no comments).
void write_poly(std::ostream& os, const MultiPoly& poly);
MultiPoly read_poly(std::istream& is, const PrimeField& field, int vars);

void write_poly_file(const std::string& path, const MultiPoly& poly);
MultiPoly read_poly_file(const std::string& path, const PrimeField& field, int vars);

}  // namespace multcode::io

// Copyright 2026 The cohkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COH_CIRCUIT_PARSER_H
#define COH_CIRCUIT_PARSER_H

#include <string>
#include <string_view>

#include "coh/circuit.h"

namespace coh {

/// Parses the line-oriented circuit format:
///
///     qubits <n>
///     cbits <m>                                   (optional, before any op)
///     gate <NAME> <q...> [if <c>==<0|1>]
///     cgate <NAME> <targets...> ctrl <q...> when <bits>[,<bits>...]
///     measure <q> -> <c>
///
/// NAME is a standard gate name or a literal "U4:<16 entries>" / "U2:<4 entries>" with
/// comma-separated row-major complex entries such as 0.5, -1e-3, 0.5+0.5i, -i.
/// '#' starts a comment. Throws ParseError carrying the 1-based line and column.
Circuit parse_circuit(std::string_view text);
/// Reads and parses a file. Throws std::runtime_error if the file cannot be read.
Circuit parse_circuit_file(const std::string &path);

/// Inverse of parse_circuit; literal gates are written with 17 significant digits so the
/// round trip is exact.
std::string format_circuit(const Circuit &c);

/// Parses one complex literal ("1", "-0.5i", "0.5-0.25i", "i"). Returns false on malformed text.
bool parse_complex(std::string_view text, Complex &out);

}  // namespace coh

#endif

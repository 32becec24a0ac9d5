// Copyright 2026 The qem authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <string>

#include "qem/circuit.hpp"

namespace qem {

/// Parse an OpenQASM 2.0 program restricted to the supported gate set, a
/// single quantum register, and measure statements. Angle expressions may use
/// numeric literals, pi, parentheses, and + - * /. Unsupported statements
/// raise ParseError with the offending line. measure statements populate the
/// circuit's measured set; they do not appear in the gate list.
Circuit parse_qasm(const std::string &text);

/// Serialize to OpenQASM 2.0. Angles are printed with 17 significant digits
/// so parse_qasm(emit_qasm(c)) == c holds exactly.
std::string emit_qasm(const Circuit &c);

} // namespace qem

// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "qmul/circuit.hpp"
#include "qmul/metrics.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

namespace qmul {

/**
 * JSON circuit schema:
 *
 *   {"qubits": 22,
 *    "gates": [{"kind": "cphase", "targets": [3], "controls": [1],
 *               "angle": {"sign": -1, "denom_pow": 2}}, ...],
 *    "annotations": [{"kind": "qft", "label": "qft", "begin": 9, "end": 30}, ...]}
 *
 * "angle" appears only on cphase gates.
 */
[[nodiscard]] nlohmann::json circuit_to_json(const Circuit& circuit);
/// Throws StructuralError on schema violations or out-of-range qubits.
[[nodiscard]] Circuit circuit_from_json(const nlohmann::json& doc);

[[nodiscard]] nlohmann::json metrics_to_json(const CircuitMetrics& metrics);

/// OpenQASM 3 text using h, x, swap, cp and ccx over a single register q.
[[nodiscard]] std::string circuit_to_qasm(const Circuit& circuit);

/// Angle as a QASM expression of pi, e.g. "pi/4" or "-pi".
[[nodiscard]] std::string qasm_angle(DyadicAngle angle);

/// Throws IoError.
void write_text_file(const std::filesystem::path& path, const std::string& text);
[[nodiscard]] std::string read_text_file(const std::filesystem::path& path);

} // namespace qmul

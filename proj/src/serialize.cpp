// SPDX-License-Identifier: Apache-2.0

#include "qmul/serialize.hpp"

#include "qmul/errors.hpp"

#include <fstream>
#include <sstream>

namespace qmul {

using nlohmann::json;

namespace {

json qubit_list(std::span<const Qubit> qubits) { return json(std::vector<Qubit>(qubits.begin(), qubits.end())); }

std::vector<Qubit> read_qubits(const json& entry, const char* key) {
    if (!entry.contains(key)) {
        return {};
    }
    const auto& list = entry.at(key);
    if (!list.is_array()) {
        throw StructuralError(std::string("gate field '") + key + "' must be an array");
    }
    std::vector<Qubit> qubits;
    for (const auto& q : list) {
        if (!q.is_number_unsigned()) {
            throw StructuralError(std::string("gate field '") + key + "' must hold non-negative integers");
        }
        qubits.push_back(q.get<Qubit>());
    }
    return qubits;
}

Gate gate_from_json(const json& entry) {
    const auto kind = entry.at("kind").get<std::string>();
    const auto targets = read_qubits(entry, "targets");
    const auto controls = read_qubits(entry, "controls");
    auto expect = [&](std::size_t n_controls, std::size_t n_targets) {
        if (controls.size() != n_controls || targets.size() != n_targets) {
            throw StructuralError("gate '" + kind + "' has the wrong number of controls or targets");
        }
    };
    if (kind == "h") {
        expect(0, 1);
        return Gate::h(targets[0]);
    }
    if (kind == "x") {
        expect(0, 1);
        return Gate::x(targets[0]);
    }
    if (kind == "swap") {
        expect(0, 2);
        return Gate::swap(targets[0], targets[1]);
    }
    if (kind == "cphase") {
        expect(1, 1);
        const auto& angle = entry.at("angle");
        const auto sign = angle.at("sign").get<int>();
        if (sign != 1 && sign != -1) {
            throw StructuralError("cphase angle sign must be 1 or -1");
        }
        return Gate::cphase(controls[0], targets[0], DyadicAngle(sign, angle.at("denom_pow").get<unsigned>()));
    }
    if (kind == "toffoli") {
        expect(2, 1);
        return Gate::toffoli(controls[0], controls[1], targets[0]);
    }
    throw StructuralError("unknown gate kind '" + kind + "'");
}

} // namespace

json circuit_to_json(const Circuit& circuit) {
    json gates = json::array();
    for (const auto& gate : circuit) {
        json entry{{"kind", std::string(to_string(gate.kind()))},
                   {"targets", qubit_list(gate.targets())},
                   {"controls", qubit_list(gate.controls())}};
        if (gate.kind() == GateKind::CPhase) {
            entry["angle"] = {{"sign", gate.angle().sign()}, {"denom_pow", gate.angle().denom_pow()}};
        }
        gates.push_back(std::move(entry));
    }
    json annotations = json::array();
    for (const auto& a : circuit.annotations()) {
        annotations.push_back(
            {{"kind", std::string(to_string(a.kind))}, {"label", a.label}, {"begin", a.begin}, {"end", a.end}});
    }
    return {{"qubits", circuit.qubit_count()}, {"gates", std::move(gates)}, {"annotations", std::move(annotations)}};
}

Circuit circuit_from_json(const json& doc) {
    try {
        const auto qubits = doc.at("qubits").get<std::size_t>();
        std::vector<Gate> gates;
        for (const auto& entry : doc.at("gates")) {
            gates.push_back(gate_from_json(entry));
        }
        std::vector<Annotation> annotations;
        if (doc.contains("annotations")) {
            for (const auto& entry : doc.at("annotations")) {
                annotations.push_back({block_kind_from_string(entry.at("kind").get<std::string>()),
                                       entry.value("label", std::string{}), entry.at("begin").get<std::size_t>(),
                                       entry.at("end").get<std::size_t>()});
            }
        }
        return Circuit(qubits, std::move(gates), std::move(annotations));
    } catch (const json::exception& e) {
        throw StructuralError(std::string("malformed circuit JSON: ") + e.what());
    }
}

json metrics_to_json(const CircuitMetrics& m) {
    json counts;
    for (auto kind : {GateKind::H, GateKind::X, GateKind::Swap, GateKind::CPhase, GateKind::Toffoli}) {
        counts[std::string(to_string(kind))] = m.count(kind);
    }
    return {{"counts", counts},         {"total_gates", m.total_gates}, {"depth", m.depth},
            {"qft_blocks", m.qft_blocks}, {"iqft_blocks", m.iqft_blocks}, {"qubit_count", m.qubit_count},
            {"qft_widths", m.qft_widths}};
}

std::string qasm_angle(DyadicAngle angle) {
    const std::string sign = angle.sign() < 0 ? "-" : "";
    if (angle.denom_pow() == 0) {
        return sign + "2*pi";
    }
    if (angle.denom_pow() == 1) {
        return sign + "pi";
    }
    // 2pi / 2^k == pi / 2^(k-1); the denominator is written out because '^' is XOR in OpenQASM 3.
    const auto shift = angle.denom_pow() - 1;
    if (shift < 64) {
        return sign + "pi/" + std::to_string(std::uint64_t{1} << shift);
    }
    return sign + "pi/(2.0**" + std::to_string(shift) + ")";
}

std::string circuit_to_qasm(const Circuit& circuit) {
    std::ostringstream os;
    os << "OPENQASM 3.0;\n"
       << "include \"stdgates.inc\";\n"
       << "qubit[" << circuit.qubit_count() << "] q;\n";
    for (const auto& gate : circuit) {
        const auto qs = gate.qubits();
        switch (gate.kind()) {
        case GateKind::H: os << "h q[" << qs[0] << "];\n"; break;
        case GateKind::X: os << "x q[" << qs[0] << "];\n"; break;
        case GateKind::Swap: os << "swap q[" << qs[0] << "], q[" << qs[1] << "];\n"; break;
        case GateKind::CPhase:
            os << "cp(" << qasm_angle(gate.angle()) << ") q[" << qs[0] << "], q[" << qs[1] << "];\n";
            break;
        case GateKind::Toffoli: os << "ccx q[" << qs[0] << "], q[" << qs[1] << "], q[" << qs[2] << "];\n"; break;
        }
    }
    return os.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open '" + path.string() + "' for writing");
    }
    out << text;
    if (!out.flush()) {
        throw IoError("failed writing '" + path.string() + "'");
    }
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path.string() + "' for reading");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace qmul

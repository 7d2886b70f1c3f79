// Copyright 2026 The dsynth Authors
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

#include "dsynth/io.h"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <vector>

#include "dsynth/errors.h"
#include "json.hpp"

namespace dsynth {

namespace {

using nlohmann::json;

json parse_json(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::exception &e) {
        throw InvalidInputError(std::string("malformed JSON: ") + e.what());
    }
}

template <typename T>
T field(const json &obj, const char *key) {
    if (!obj.is_object() || !obj.contains(key)) {
        throw InvalidInputError(std::string("missing field '") + key + "'");
    }
    try {
        return obj.at(key).get<T>();
    } catch (const json::exception &e) {
        throw InvalidInputError(std::string("bad field '") + key + "': " + e.what());
    }
}

int parse_int_field(const json &obj, const char *key) {
    const json &v = obj.contains(key) ? obj.at(key) : json();
    if (!v.is_number_integer()) {
        throw InvalidInputError(std::string("field '") + key + "' must be an integer");
    }
    return field<int>(obj, key);
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void put_u32(std::string &out, uint32_t v) {
    for (int i = 0; i < 4; i++) {
        out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
    }
}

uint64_t get_le(std::string_view bytes, size_t offset, int width) {
    uint64_t v = 0;
    for (int i = 0; i < width; i++) {
        v |= static_cast<uint64_t>(static_cast<unsigned char>(bytes[offset + i])) << (8 * i);
    }
    return v;
}

std::string trim(std::string_view s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) {
        return {};
    }
    size_t e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

int parse_wire(const std::string &token, int line_no) {
    int idx = -1;
    char tail = 0;
    if (std::sscanf(token.c_str(), " q[%d]%c", &idx, &tail) < 1 || idx < 0) {
        throw InvalidInputError("line " + std::to_string(line_no) + ": bad qubit operand '" + token + "'");
    }
    return idx + 1;
}

double parse_number(const std::string &text, int line_no) {
    try {
        size_t used = 0;
        double v = std::stod(text, &used);
        if (trim(std::string_view(text).substr(used)).empty()) {
            return v;
        }
    } catch (const std::exception &) {
    }
    throw InvalidInputError("line " + std::to_string(line_no) + ": unsupported angle expression '" + text + "'");
}

}  // namespace

std::string bitstring(uint64_t k, int n) {
    std::string s(static_cast<size_t>(n), '0');
    for (int q = 1; q <= n; q++) {
        if (bit_of(k, n, q)) {
            s[q - 1] = '1';
        }
    }
    return s;
}

std::string read_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InvalidInputError("cannot open '" + path.string() + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string phase_to_json(const PhaseSpec &spec) {
    json j;
    j["n"] = spec.n();
    j["theta"] = spec.theta();
    return j.dump() + "\n";
}

PhaseSpec phase_from_json(std::string_view text) {
    json j = parse_json(text);
    int n = parse_int_field(j, "n");
    if (!j.contains("theta") || !j.at("theta").is_array()) {
        throw InvalidInputError("field 'theta' must be an array");
    }
    std::vector<double> theta;
    for (const json &v : j.at("theta")) {
        if (!v.is_number()) {
            throw InvalidInputError("theta entries must be numbers");
        }
        theta.push_back(v.get<double>());
    }
    return PhaseSpec(n, std::move(theta));
}

std::string phase_to_phv(const PhaseSpec &spec) {
    std::string out;
    out.reserve(4 + 8 * spec.size());
    put_u32(out, static_cast<uint32_t>(spec.n()));
    for (double v : spec.theta()) {
        uint64_t bits = std::bit_cast<uint64_t>(v);
        put_u32(out, static_cast<uint32_t>(bits));
        put_u32(out, static_cast<uint32_t>(bits >> 32));
    }
    return out;
}

PhaseSpec phase_from_phv(std::string_view bytes) {
    if (bytes.size() < 4) {
        throw InvalidInputError(".phv data is shorter than its header");
    }
    uint64_t n = get_le(bytes, 0, 4);
    if (n < 1 || n > static_cast<uint64_t>(kMaxQubits)) {
        throw InvalidInputError(".phv qubit count " + std::to_string(n) + " out of range");
    }
    size_t count = size_t{1} << n;
    if (bytes.size() != 4 + 8 * count) {
        throw InvalidInputError(".phv payload has " + std::to_string(bytes.size() - 4) + " bytes, expected " +
                                std::to_string(8 * count));
    }
    std::vector<double> theta(count);
    for (size_t k = 0; k < count; k++) {
        theta[k] = std::bit_cast<double>(get_le(bytes, 4 + 8 * k, 8));
    }
    return PhaseSpec(static_cast<int>(n), std::move(theta));
}

PhaseSpec load_phase_file(const std::filesystem::path &path) {
    std::string data = read_file(path);
    if (path.extension() == ".phv") {
        return phase_from_phv(data);
    }
    return phase_from_json(data);
}

void save_phase_file(const std::filesystem::path &path, const PhaseSpec &spec) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    }
    out << (path.extension() == ".phv" ? phase_to_phv(spec) : phase_to_json(spec));
    if (!out) {
        throw std::runtime_error("failed writing '" + path.string() + "'");
    }
}

std::string circuit_to_json(const GridCircuit &circuit) {
    json gates = json::array();
    for (const auto &pg : circuit.gates()) {
        json g;
        if (pg.gate.is_rz()) {
            g["kind"] = "rz";
            g["q"] = pg.gate.target;
            g["col"] = pg.column;
            g["beta"] = pg.gate.beta;
        } else {
            g["kind"] = "cnot";
            g["c"] = pg.gate.control;
            g["t"] = pg.gate.target;
            g["col"] = pg.column;
        }
        gates.push_back(std::move(g));
    }
    json j;
    j["n"] = circuit.n();
    j["width"] = circuit.width();
    j["gates"] = std::move(gates);
    return j.dump() + "\n";
}

GridCircuit circuit_from_json(std::string_view text) {
    json j = parse_json(text);
    int n = parse_int_field(j, "n");
    int width = parse_int_field(j, "width");
    if (!j.contains("gates") || !j.at("gates").is_array()) {
        throw InvalidInputError("field 'gates' must be an array");
    }
    GridBuilder grid(n, width);
    for (const json &g : j.at("gates")) {
        std::string kind = field<std::string>(g, "kind");
        int col = parse_int_field(g, "col");
        Gate gate = Gate::rz(0, 0);
        if (kind == "rz") {
            gate = Gate::rz(parse_int_field(g, "q"), field<double>(g, "beta"));
        } else if (kind == "cnot") {
            gate = Gate::cnot(parse_int_field(g, "c"), parse_int_field(g, "t"));
        } else {
            throw InvalidInputError("unknown gate kind '" + kind + "'");
        }
        if (!grid.try_place(gate, col)) {
            throw InvalidInputError("gate " + gate.str() + " overlaps an occupied cell in column " +
                                    std::to_string(col));
        }
    }
    return std::move(grid).build();
}

std::string circuit_to_qasm(const GridCircuit &circuit) {
    std::ostringstream out;
    out << "OPENQASM 2.0;\n";
    out << "include \"qelib1.inc\";\n";
    out << "qreg q[" << circuit.n() << "];\n";
    out << "// Global phase: each rz(-b) below stands for RZ(-b) = diag(e^{ib/2}, e^{-ib/2}),\n";
    out << "// which equals qelib1 rz(-b) = diag(1, e^{-ib}) times e^{ib/2}.\n";
    out << "// width " << circuit.width() << "\n";
    int current = 0;
    for (const auto &pg : circuit.gates()) {
        if (pg.column != current) {
            current = pg.column;
            out << "// col " << current << "\n";
        }
        if (pg.gate.is_rz()) {
            out << "rz(" << format_double(-pg.gate.beta) << ") q[" << pg.gate.target - 1 << "];\n";
        } else {
            out << "cx q[" << pg.gate.control - 1 << "],q[" << pg.gate.target - 1 << "];\n";
        }
    }
    return out.str();
}

GridCircuit circuit_from_qasm(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    int n = -1;
    int width = -1;
    int column = 0;
    bool has_columns = false;
    std::vector<std::pair<Gate, int>> gates;
    int line_no = 0;
    while (std::getline(in, raw)) {
        line_no++;
        std::string line = trim(raw);
        if (line.empty()) {
            continue;
        }
        if (line.rfind("//", 0) == 0) {
            int v = 0;
            if (std::sscanf(line.c_str(), "// col %d", &v) == 1) {
                column = v;
                has_columns = true;
            } else if (std::sscanf(line.c_str(), "// width %d", &v) == 1) {
                width = v;
            }
            continue;
        }
        if (line.back() != ';') {
            throw InvalidInputError("line " + std::to_string(line_no) + ": missing ';'");
        }
        line.pop_back();
        if (line.rfind("OPENQASM", 0) == 0 || line.rfind("include", 0) == 0) {
            continue;
        }
        if (line.rfind("qreg", 0) == 0) {
            if (std::sscanf(line.c_str(), "qreg q[%d]", &n) != 1 || n < 1) {
                throw InvalidInputError("line " + std::to_string(line_no) + ": bad qreg declaration");
            }
            continue;
        }
        if (n < 0) {
            throw InvalidInputError("line " + std::to_string(line_no) + ": gate before qreg declaration");
        }
        if (line.rfind("rz(", 0) == 0) {
            size_t close = line.find(')');
            if (close == std::string::npos) {
                throw InvalidInputError("line " + std::to_string(line_no) + ": unterminated rz angle");
            }
            double angle = parse_number(line.substr(3, close - 3), line_no);
            int q = parse_wire(trim(std::string_view(line).substr(close + 1)), line_no);
            gates.emplace_back(Gate::rz(q, -angle), column);
        } else if (line.rfind("cx", 0) == 0) {
            std::string args = trim(std::string_view(line).substr(2));
            size_t comma = args.find(',');
            if (comma == std::string::npos) {
                throw InvalidInputError("line " + std::to_string(line_no) + ": cx needs two operands");
            }
            int c = parse_wire(trim(std::string_view(args).substr(0, comma)), line_no);
            int t = parse_wire(trim(std::string_view(args).substr(comma + 1)), line_no);
            gates.emplace_back(Gate::cnot(c, t), column);
        } else {
            throw InvalidInputError("line " + std::to_string(line_no) + ": unsupported statement '" + line + "'");
        }
    }
    if (n < 0) {
        throw InvalidInputError("missing qreg declaration");
    }
    if (!has_columns && !gates.empty()) {
        std::vector<Gate> seq;
        for (const auto &[g, col] : gates) {
            seq.push_back(g);
        }
        return GridCircuit::from_sequence(n, seq);
    }
    if (width < 0 || !has_columns) {
        width = std::max(width, 0);
        for (const auto &[g, col] : gates) {
            width = std::max(width, col);
        }
    }
    GridBuilder grid(n, width);
    for (const auto &[g, col] : gates) {
        if (!grid.try_place(g, col)) {
            throw InvalidInputError("gate " + g.str() + " overlaps an occupied cell in column " +
                                    std::to_string(col));
        }
    }
    return std::move(grid).build();
}

GridCircuit load_circuit_file(const std::filesystem::path &path) {
    std::string data = read_file(path);
    if (path.extension() == ".qasm") {
        return circuit_from_qasm(data);
    }
    return circuit_from_json(data);
}

std::string report_to_json(const SimReport &report) {
    json j;
    j["diagonal"] = report.is_diagonal;
    j["max_phase_error"] = report.max_phase_error;
    j["global_phase"] = report.global_phase_offset;
    if (report.failed_k) {
        j["failed_k"] = bitstring(*report.failed_k, report.n);
    } else {
        j["failed_k"] = nullptr;
    }
    return j.dump() + "\n";
}

}  // namespace dsynth

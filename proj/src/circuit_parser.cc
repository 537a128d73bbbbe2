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

#include "coh/circuit_parser.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "coh/errors.h"
#include "coh/gates.h"

namespace coh {

namespace {

struct Token {
    std::string_view text;
    std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    std::size_t k = 0;
    while (k < line.size()) {
        while (k < line.size() && (line[k] == ' ' || line[k] == '\t' || line[k] == '\r')) {
            ++k;
        }
        if (k >= line.size()) {
            break;
        }
        const std::size_t start = k;
        while (k < line.size() && line[k] != ' ' && line[k] != '\t' && line[k] != '\r') {
            ++k;
        }
        out.push_back({line.substr(start, k - start), start + 1});
    }
    return out;
}

bool parse_double(std::string_view s, double &out) {
    if (s.empty()) {
        return false;
    }
    if (s.front() == '+') {
        s.remove_prefix(1);
    }
    const auto res = std::from_chars(s.data(), s.data() + s.size(), out);
    return res.ec == std::errc() && res.ptr == s.data() + s.size() && std::isfinite(out);
}

// Imaginary part text without the trailing i: "", "+", "-" mean ±1.
bool parse_imag(std::string_view s, double &out) {
    if (s.empty() || s == "+") {
        out = 1;
        return true;
    }
    if (s == "-") {
        out = -1;
        return true;
    }
    return parse_double(s, out);
}

}  // namespace

bool parse_complex(std::string_view s, Complex &out) {
    if (s.empty()) {
        return false;
    }
    const char last = s.back();
    if (last != 'i' && last != 'j') {
        double re;
        if (!parse_double(s, re)) {
            return false;
        }
        out = {re, 0};
        return true;
    }
    s.remove_suffix(1);
    // Split at the last sign that is not the leading sign and not part of an exponent.
    std::size_t split = std::string_view::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    double re = 0;
    double im = 0;
    if (split == std::string_view::npos) {
        if (!parse_imag(s, im)) {
            return false;
        }
    } else if (!parse_double(s.substr(0, split), re) || !parse_imag(s.substr(split), im)) {
        return false;
    }
    out = {re, im};
    return true;
}

namespace {

class LineParser {
   public:
    LineParser(std::size_t line, std::vector<Token> tokens) : line_(line), tokens_(std::move(tokens)) {
    }

    [[noreturn]] void fail(ParseError::Kind kind, std::size_t column, const std::string &msg) const {
        throw ParseError(kind, line_, column, msg);
    }

    std::size_t end_column() const {
        return tokens_.empty() ? 1 : tokens_.back().column + tokens_.back().text.size();
    }

    const Token &at(std::size_t k, const char *what) const {
        if (k >= tokens_.size()) {
            fail(ParseError::Kind::Syntax, end_column(), std::string("expected ") + what);
        }
        return tokens_[k];
    }

    std::size_t number(std::size_t k, const char *what) const {
        const Token &t = at(k, what);
        std::size_t v = 0;
        const auto res = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
        if (res.ec != std::errc() || res.ptr != t.text.data() + t.text.size()) {
            fail(ParseError::Kind::Syntax, t.column, std::string("expected ") + what + ", got '" + std::string(t.text) + "'");
        }
        return v;
    }

    std::size_t wire(std::size_t k, std::size_t limit, const char *what) const {
        const std::size_t v = number(k, what);
        if (v >= limit) {
            fail(ParseError::Kind::WireRange, tokens_[k].column,
                 std::string(what) + " " + std::to_string(v) + " out of range (register has " + std::to_string(limit) + ")");
        }
        return v;
    }

    Gate gate_matrix(std::size_t k) const {
        const Token &t = at(k, "gate name");
        const std::string name(t.text);
        if (auto m = gates::by_name(name)) {
            return Gate{name, std::move(*m), {}};
        }
        std::size_t dim = 0;
        if (name.rfind("U4:", 0) == 0) {
            dim = 4;
        } else if (name.rfind("U2:", 0) == 0) {
            dim = 2;
        } else {
            fail(ParseError::Kind::UnknownGate, t.column, "unknown gate '" + name + "'");
        }
        std::string_view body = t.text.substr(3);
        ComplexVector entries;
        std::size_t offset = 3;
        while (true) {
            const std::size_t comma = body.find(',');
            const std::string_view part = body.substr(0, comma);
            Complex z;
            if (!parse_complex(part, z)) {
                fail(ParseError::Kind::Syntax, t.column + offset, "malformed complex entry '" + std::string(part) + "'");
            }
            entries.push_back(z);
            if (comma == std::string_view::npos) {
                break;
            }
            offset += comma + 1;
            body.remove_prefix(comma + 1);
        }
        if (entries.size() != dim * dim) {
            fail(ParseError::Kind::Syntax, t.column,
                 "literal needs " + std::to_string(dim * dim) + " entries, got " + std::to_string(entries.size()));
        }
        ComplexMatrix m(dim, dim, std::move(entries));
        if (!is_unitary(m, 1e-9)) {
            fail(ParseError::Kind::Syntax, t.column, "literal matrix is not unitary");
        }
        return Gate{dim == 4 ? "U4" : "U2", std::move(m), {}};
    }

    std::size_t size() const {
        return tokens_.size();
    }
    const Token &operator[](std::size_t k) const {
        return tokens_[k];
    }

   private:
    std::size_t line_;
    std::vector<Token> tokens_;
};

std::size_t arity(const Gate &g) {
    std::size_t k = 0;
    while ((std::size_t{1} << k) < g.matrix.rows()) {
        ++k;
    }
    return k;
}

}  // namespace

Circuit parse_circuit(std::string_view text) {
    std::optional<Circuit> circuit;
    bool saw_op = false;
    std::size_t line_no = 0;
    std::size_t start = 0;
    std::vector<bool> written;
    while (start <= text.size()) {
        std::size_t nl = text.find('\n', start);
        if (nl == std::string_view::npos) {
            nl = text.size();
        }
        std::string_view line = text.substr(start, nl - start);
        start = nl + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        LineParser p(line_no, tokenize(line));
        if (p.size() == 0) {
            continue;
        }
        const std::string_view kw = p[0].text;
        if (!circuit) {
            if (kw != "qubits") {
                p.fail(ParseError::Kind::Syntax, p[0].column, "expected 'qubits <n>' header");
            }
            const std::size_t n = p.number(1, "qubit count");
            if (n == 0 || n > 12) {
                p.fail(ParseError::Kind::Syntax, p[1].column, "qubit count must lie in [1, 12]");
            }
            if (p.size() > 2) {
                p.fail(ParseError::Kind::Syntax, p[2].column, "unexpected token");
            }
            circuit.emplace(n, 0);
            continue;
        }
        if (kw == "qubits") {
            p.fail(ParseError::Kind::Syntax, p[0].column, "duplicate 'qubits' header");
        }
        if (kw == "cbits") {
            if (saw_op || circuit->num_cbits() != 0) {
                p.fail(ParseError::Kind::Syntax, p[0].column, "'cbits' must follow the header once, before any op");
            }
            const std::size_t m = p.number(1, "classical bit count");
            if (p.size() > 2) {
                p.fail(ParseError::Kind::Syntax, p[2].column, "unexpected token");
            }
            circuit->resize(circuit->num_qubits(), m);
            written.assign(m, false);
            continue;
        }
        saw_op = true;
        const std::size_t nq = circuit->num_qubits();
        if (kw == "gate") {
            Gate g = p.gate_matrix(1);
            const std::size_t k = arity(g);
            std::size_t pos = 2;
            for (std::size_t j = 0; j < k; ++j, ++pos) {
                g.targets.push_back(p.wire(pos, nq, "qubit"));
            }
            for (std::size_t a = 0; a < g.targets.size(); ++a) {
                for (std::size_t b = a + 1; b < g.targets.size(); ++b) {
                    if (g.targets[a] == g.targets[b]) {
                        p.fail(ParseError::Kind::Syntax, p[2 + b].column, "repeated qubit");
                    }
                }
            }
            if (pos == p.size()) {
                circuit->append(std::move(g));
                continue;
            }
            if (p[pos].text != "if") {
                p.fail(ParseError::Kind::Syntax, p[pos].column, "expected 'if' or end of line");
            }
            const Token &cond = p.at(pos + 1, "condition <c>==<v>");
            const auto eq = cond.text.find("==");
            if (eq == std::string_view::npos || pos + 2 != p.size()) {
                p.fail(ParseError::Kind::Syntax, cond.column, "expected condition <c>==<0|1>");
            }
            std::size_t c = 0;
            const auto cb = cond.text.substr(0, eq);
            const auto res = std::from_chars(cb.data(), cb.data() + cb.size(), c);
            const auto val = cond.text.substr(eq + 2);
            if (res.ec != std::errc() || res.ptr != cb.data() + cb.size() || (val != "0" && val != "1")) {
                p.fail(ParseError::Kind::Syntax, cond.column, "expected condition <c>==<0|1>");
            }
            if (c >= circuit->num_cbits()) {
                p.fail(ParseError::Kind::WireRange, cond.column, "classical bit " + std::to_string(c) + " out of range");
            }
            if (!written[c]) {
                p.fail(ParseError::Kind::UnwrittenBit, cond.column,
                       "condition on classical bit " + std::to_string(c) + " before any measurement writes it");
            }
            circuit->append(ClassicallyControlledGate{std::move(g), c, val == "1" ? 1 : 0});
        } else if (kw == "cgate") {
            Gate g = p.gate_matrix(1);
            const std::size_t k = arity(g);
            std::size_t pos = 2;
            for (std::size_t j = 0; j < k; ++j, ++pos) {
                g.targets.push_back(p.wire(pos, nq, "qubit"));
            }
            if (p.at(pos, "'ctrl'").text != "ctrl") {
                p.fail(ParseError::Kind::Syntax, p[pos].column, "expected 'ctrl'");
            }
            ++pos;
            std::vector<std::size_t> controls;
            while (pos < p.size() && p[pos].text != "when") {
                controls.push_back(p.wire(pos, nq, "qubit"));
                ++pos;
            }
            if (controls.empty()) {
                p.fail(ParseError::Kind::Syntax, p.at(pos, "control qubit").column, "expected at least one control qubit");
            }
            const Token &when = p.at(pos, "'when'");
            const Token &bits = p.at(pos + 1, "trigger bitstrings");
            if (pos + 2 != p.size()) {
                p.fail(ParseError::Kind::Syntax, p[pos + 2].column, "unexpected token");
            }
            (void)when;
            std::vector<std::size_t> triggers;
            std::string_view rest = bits.text;
            std::size_t col = bits.column;
            while (true) {
                const std::size_t comma = rest.find(',');
                const std::string_view b = rest.substr(0, comma);
                if (b.size() != controls.size() || b.find_first_not_of("01") != std::string_view::npos) {
                    p.fail(ParseError::Kind::Syntax, col,
                           "trigger '" + std::string(b) + "' must be a " + std::to_string(controls.size()) + "-bit string");
                }
                std::size_t v = 0;
                for (char ch : b) {
                    v = 2 * v + static_cast<std::size_t>(ch - '0');
                }
                triggers.push_back(v);
                if (comma == std::string_view::npos) {
                    break;
                }
                col += comma + 1;
                rest.remove_prefix(comma + 1);
            }
            std::vector<std::size_t> all = g.targets;
            all.insert(all.end(), controls.begin(), controls.end());
            std::sort(all.begin(), all.end());
            if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
                p.fail(ParseError::Kind::Syntax, p[2].column, "targets and controls must be distinct");
            }
            circuit->append(ControlledGate{std::move(g), std::move(controls), std::move(triggers)});
        } else if (kw == "measure") {
            const std::size_t q = p.wire(1, nq, "qubit");
            if (p.at(2, "'->'").text != "->") {
                p.fail(ParseError::Kind::Syntax, p[2].column, "expected '->'");
            }
            const std::size_t c = p.wire(3, circuit->num_cbits(), "classical bit");
            if (p.size() > 4) {
                p.fail(ParseError::Kind::Syntax, p[4].column, "unexpected token");
            }
            circuit->append(Measure{q, c});
            written[c] = true;
        } else {
            p.fail(ParseError::Kind::Syntax, p[0].column, "unknown statement '" + std::string(kw) + "'");
        }
    }
    if (!circuit) {
        throw ParseError(ParseError::Kind::Syntax, line_no == 0 ? 1 : line_no, 1, "missing 'qubits <n>' header");
    }
    return std::move(*circuit);
}

Circuit parse_circuit_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot read '" + path + "'");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_circuit(ss.str());
}

namespace {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string format_complex(Complex z) {
    std::string s = format_double(z.real());
    if (z.imag() != 0 || std::signbit(z.imag())) {
        const std::string im = format_double(z.imag());
        s += (im.front() == '-' ? "" : "+") + im + "i";
    }
    return s;
}

std::string gate_token(const Gate &g) {
    if (auto m = gates::by_name(g.name); m && *m == g.matrix) {
        return g.name;
    }
    std::string s = g.matrix.rows() == 4 ? "U4:" : "U2:";
    const auto e = g.matrix.entries();
    for (std::size_t k = 0; k < e.size(); ++k) {
        if (k) {
            s += ',';
        }
        s += format_complex(e[k]);
    }
    return s;
}

std::string wires(const std::vector<std::size_t> &w) {
    std::string s;
    for (auto q : w) {
        s += ' ' + std::to_string(q);
    }
    return s;
}

}  // namespace

std::string format_circuit(const Circuit &c) {
    std::string out = "qubits " + std::to_string(c.num_qubits()) + "\n";
    if (c.num_cbits()) {
        out += "cbits " + std::to_string(c.num_cbits()) + "\n";
    }
    for (const auto &op : c.ops()) {
        if (auto *g = std::get_if<Gate>(&op)) {
            out += "gate " + gate_token(*g) + wires(g->targets) + "\n";
        } else if (auto *cg = std::get_if<ControlledGate>(&op)) {
            out += "cgate " + gate_token(cg->inner) + wires(cg->inner.targets) + " ctrl" + wires(cg->controls) + " when ";
            for (std::size_t k = 0; k < cg->triggers.size(); ++k) {
                if (k) {
                    out += ',';
                }
                for (std::size_t b = cg->controls.size(); b-- > 0;) {
                    out += ((cg->triggers[k] >> b) & 1U) ? '1' : '0';
                }
            }
            out += "\n";
        } else if (auto *m = std::get_if<Measure>(&op)) {
            out += "measure " + std::to_string(m->qubit) + " -> " + std::to_string(m->cbit) + "\n";
        } else {
            const auto &cc = std::get<ClassicallyControlledGate>(op);
            out += "gate " + gate_token(cc.inner) + wires(cc.inner.targets) + " if " + std::to_string(cc.cbit) +
                   "==" + std::to_string(cc.value) + "\n";
        }
    }
    return out;
}

}  // namespace coh

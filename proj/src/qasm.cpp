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

#include <cctype>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "qem/errors.hpp"
#include "qem/qasm.hpp"

namespace qem {

namespace {

// Minimal arithmetic expression evaluator for gate angles:
// expr := term (('+'|'-') term)*
// term := factor (('*'|'/') factor)*
// factor := NUMBER | 'pi' | '-' factor | '(' expr ')'
class AngleParser {
  public:
    explicit AngleParser(const std::string &s) : s_(s) {}

    double parse() {
        const double v = expr();
        skip_ws();
        if (pos_ != s_.size())
            fail();
        return v;
    }

  private:
    double expr() {
        double v = term();
        for (;;) {
            skip_ws();
            if (peek() == '+') {
                ++pos_;
                v += term();
            } else if (peek() == '-') {
                ++pos_;
                v -= term();
            } else {
                return v;
            }
        }
    }

    double term() {
        double v = factor();
        for (;;) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                v *= factor();
            } else if (peek() == '/') {
                ++pos_;
                v /= factor();
            } else {
                return v;
            }
        }
    }

    double factor() {
        skip_ws();
        const char c = peek();
        if (c == '-') {
            ++pos_;
            return -factor();
        }
        if (c == '(') {
            ++pos_;
            const double v = expr();
            skip_ws();
            if (peek() != ')')
                fail();
            ++pos_;
            return v;
        }
        if (c == 'p' && pos_ + 1 < s_.size() && s_[pos_ + 1] == 'i') {
            pos_ += 2;
            return std::numbers::pi;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            std::size_t used = 0;
            const double v = std::stod(s_.substr(pos_), &used);
            pos_ += used;
            return v;
        }
        fail();
        return 0.0;
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < s_.size() &&
               std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }
    [[noreturn]] void fail() const {
        throw ParseError("malformed angle expression: " + s_);
    }

    const std::string &s_;
    std::size_t pos_ = 0;
};

std::string strip(const std::string &s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    return s.substr(b, e - b);
}

struct Operand {
    std::string reg;
    bool indexed = false;
    int index = 0;
};

Operand parse_operand(const std::string &text) {
    const std::string t = strip(text);
    Operand op;
    const std::size_t lb = t.find('[');
    if (lb == std::string::npos) {
        op.reg = t;
        return op;
    }
    const std::size_t rb = t.find(']', lb);
    if (rb == std::string::npos || rb + 1 != t.size())
        throw ParseError("malformed operand: " + text);
    op.reg = strip(t.substr(0, lb));
    op.indexed = true;
    try {
        op.index = std::stoi(t.substr(lb + 1, rb - lb - 1));
    } catch (const std::exception &) {
        throw ParseError("malformed operand index: " + text);
    }
    return op;
}

std::vector<std::string> split_on_commas_top_level(const std::string &s) {
    std::vector<std::string> parts;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(' || c == '[')
            ++depth;
        if (c == ')' || c == ']')
            --depth;
        if (c == ',' && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    return parts;
}

} // namespace

Circuit parse_qasm(const std::string &text) {
    // Strip line comments, then process ';'-terminated statements.
    std::string clean;
    clean.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '/' && i + 1 < text.size() && text[i + 1] == '/') {
            while (i < text.size() && text[i] != '\n')
                ++i;
        }
        if (i < text.size())
            clean.push_back(text[i]);
    }

    Circuit c;
    std::string qreg_name;
    std::string creg_name;
    bool saw_qreg = false;

    std::stringstream ss(clean);
    std::string stmt;
    while (std::getline(ss, stmt, ';')) {
        const std::string line = strip(stmt);
        if (line.empty())
            continue;
        if (line.rfind("OPENQASM", 0) == 0)
            continue;
        if (line.rfind("include", 0) == 0)
            continue;
        if (line.rfind("barrier", 0) == 0)
            continue;
        if (line.rfind("qreg", 0) == 0) {
            if (saw_qreg)
                throw ParseError("only a single quantum register is supported");
            const Operand op = parse_operand(strip(line.substr(4)));
            if (!op.indexed || op.index < 1)
                throw ParseError("malformed qreg declaration: " + line);
            qreg_name = op.reg;
            c.width = op.index;
            saw_qreg = true;
            continue;
        }
        if (line.rfind("creg", 0) == 0) {
            const Operand op = parse_operand(strip(line.substr(4)));
            if (!op.indexed || op.index < 1)
                throw ParseError("malformed creg declaration: " + line);
            creg_name = op.reg;
            continue;
        }
        if (line.rfind("measure", 0) == 0) {
            if (!saw_qreg)
                throw ParseError("measure before qreg declaration");
            const std::string rest = strip(line.substr(7));
            const std::size_t arrow = rest.find("->");
            if (arrow == std::string::npos)
                throw ParseError("malformed measure statement: " + line);
            const Operand src = parse_operand(rest.substr(0, arrow));
            if (src.reg != qreg_name)
                throw ParseError("measure of undeclared register: " + line);
            if (src.indexed) {
                if (src.index < 0 || src.index >= c.width)
                    throw ParseError("measured qubit out of range: " + line);
                c.measured.insert(src.index);
            } else {
                for (int q = 0; q < c.width; ++q)
                    c.measured.insert(q);
            }
            continue;
        }

        // Gate application: NAME[(angle)] operand[, operand]
        std::size_t p = 0;
        while (p < line.size() &&
               (std::isalnum(static_cast<unsigned char>(line[p])) ||
                line[p] == '_'))
            ++p;
        const std::string name = line.substr(0, p);
        if (!is_known_gate(name))
            throw ParseError("unsupported statement: " + line);
        if (!saw_qreg)
            throw ParseError("gate before qreg declaration");

        Gate g;
        g.name = name;
        std::string rest = strip(line.substr(p));
        if (!rest.empty() && rest.front() == '(') {
            int depth = 0;
            std::size_t close = std::string::npos;
            for (std::size_t i = 0; i < rest.size(); ++i) {
                if (rest[i] == '(')
                    ++depth;
                else if (rest[i] == ')' && --depth == 0) {
                    close = i;
                    break;
                }
            }
            if (close == std::string::npos)
                throw ParseError("unbalanced parentheses: " + line);
            if (!gate_has_angle(name))
                throw ParseError("gate " + name + " takes no parameter");
            g.angle = AngleParser(rest.substr(1, close - 1)).parse();
            rest = strip(rest.substr(close + 1));
        } else if (gate_has_angle(name)) {
            throw ParseError("gate " + name + " requires a parameter");
        }

        for (const std::string &part : split_on_commas_top_level(rest)) {
            const Operand op = parse_operand(part);
            if (op.reg != qreg_name || !op.indexed)
                throw ParseError("gate operand must index the quantum "
                                 "register: " +
                                 line);
            g.qubits.push_back(op.index);
        }
        c.gates.push_back(g);
    }

    if (!saw_qreg)
        throw ParseError("program declares no quantum register");
    validate_circuit(c);
    return c;
}

std::string emit_qasm(const Circuit &c) {
    validate_circuit(c);
    std::string out;
    out += "OPENQASM 2.0;\n";
    out += "include \"qelib1.inc\";\n";
    out += "qreg q[" + std::to_string(c.width) + "];\n";
    out += "creg c[" + std::to_string(c.width) + "];\n";
    char buf[64];
    for (const Gate &g : c.gates) {
        out += g.name;
        if (gate_has_angle(g.name)) {
            std::snprintf(buf, sizeof(buf), "%.17g", g.angle);
            out += "(";
            out += buf;
            out += ")";
        }
        out += " ";
        for (std::size_t i = 0; i < g.qubits.size(); ++i) {
            if (i)
                out += ",";
            out += "q[" + std::to_string(g.qubits[i]) + "]";
        }
        out += ";\n";
    }
    for (int q : c.measured)
        out += "measure q[" + std::to_string(q) + "] -> c[" +
               std::to_string(q) + "];\n";
    return out;
}

} // namespace qem

#include "gbgg/algebra_io.hpp"

#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>

namespace gbgg {

namespace {

bool is_fraction_literal(const std::string& s) {
    size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    size_t digits = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++digits;
    if (digits == 0) return false;
    if (i == s.size()) return true;
    if (s[i] != '/') return false;
    ++i;
    digits = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++digits;
    return digits > 0 && i == s.size();
}

Scalar parse_fraction(const std::string& s, int line_no) {
    if (!is_fraction_literal(s))
        throw ParseError("line " + std::to_string(line_no) + ": bad coefficient '" + s + "'");
    mpq_class value(s);
    if (value.get_den() == 0)
        throw ParseError("line " + std::to_string(line_no) + ": zero denominator in '" + s + "'");
    return Scalar::rational(value);
}

std::string at_line(int line_no) {
    return line_no > 0 ? "line " + std::to_string(line_no) + ": " : std::string();
}

int parse_indexed(const std::string& token, char prefix, int line_no) {
    if (token.size() < 2 || token[0] != prefix)
        throw ParseError(at_line(line_no) + "expected " + std::string(1, prefix) + "<index>, got '" +
                         token + "'");
    for (size_t i = 1; i < token.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(token[i])))
            throw ParseError(at_line(line_no) + "bad index in '" + token + "'");
    return std::stoi(token.substr(1));
}

int parse_int(const std::string& token, int line_no) {
    try {
        size_t used = 0;
        int value = std::stoi(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        return value;
    } catch (const std::exception&) {
        throw ParseError(at_line(line_no) + "bad integer '" + token + "'");
    }
}

std::vector<std::string> split_whitespace(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> tokens;
    std::string t;
    while (is >> t) tokens.push_back(t);
    return tokens;
}

}  // namespace

std::string serialize(const FormAlgebra& a) {
    std::ostringstream os;
    os << "formalgebra v1\n";
    os << "d " << a.d() << "\n";
    os << "q " << a.q() << "\n";
    os << "h";
    for (int dim : a.h()) os << " " << dim;
    os << "\n";
    for (int i = 1; i < a.available_degree(); ++i) {
        os << "mult " << i << "\n";
        for (int j = 0; j < a.q(); ++j) {
            const ExactMatrix& m = a.structure_matrix(i, j);
            for (int col = 0; col < m.cols(); ++col) {
                std::string terms;
                for (int row = 0; row < m.rows(); ++row) {
                    if (m.at(row, col).is_zero()) continue;
                    if (!terms.empty()) terms += " + ";
                    terms += m.at(row, col).str() + "*b" + std::to_string(row);
                }
                if (terms.empty()) continue;
                os << "v" << j << " * b" << col << " -> " << terms << "\n";
            }
        }
    }
    return os.str();
}

FormAlgebra parse_form_algebra(std::istream& in) {
    std::string line;
    int line_no = 0;
    bool saw_header = false;
    int d = -1, q = -1;
    std::vector<int> h;
    // mult entries are collected raw (the matrices need h to be sized first).
    struct RawEntry {
        int i, j, a;
        std::vector<std::pair<Scalar, int>> terms;
        int line_no;
    };
    std::vector<RawEntry> entries;
    int current_block = -1;
    std::vector<int> seen_blocks;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::vector<std::string> tokens = split_whitespace(line);
        if (tokens.empty()) continue;
        if (!saw_header) {
            if (tokens.size() != 2 || tokens[0] != "formalgebra" || tokens[1] != "v1")
                throw ParseError("line " + std::to_string(line_no) +
                                 ": expected header 'formalgebra v1'");
            saw_header = true;
            continue;
        }
        const std::string& head = tokens[0];
        if (head == "d" || head == "q") {
            if (tokens.size() != 2)
                throw ParseError("line " + std::to_string(line_no) + ": '" + head +
                                 "' takes one integer");
            (head == "d" ? d : q) = parse_int(tokens[1], line_no);
        } else if (head == "h") {
            if (!h.empty())
                throw ParseError("line " + std::to_string(line_no) + ": duplicate 'h' directive");
            for (size_t t = 1; t < tokens.size(); ++t) h.push_back(parse_int(tokens[t], line_no));
            if (h.empty())
                throw ParseError("line " + std::to_string(line_no) + ": empty 'h' list");
        } else if (head == "mult") {
            if (tokens.size() != 2)
                throw ParseError("line " + std::to_string(line_no) + ": 'mult' takes one integer");
            current_block = parse_int(tokens[1], line_no);
            seen_blocks.push_back(current_block);
        } else if (!head.empty() && head[0] == 'v') {
            if (current_block < 0)
                throw ParseError("line " + std::to_string(line_no) +
                                 ": multiplication entry outside a 'mult' block");
            // v<j> * b<a> -> coeff*b<c> [+ coeff*b<c> ...]
            if (tokens.size() < 5 || tokens[1] != "*" || tokens[3] != "->")
                throw ParseError("line " + std::to_string(line_no) +
                                 ": expected 'v<j> * b<a> -> <terms>'");
            RawEntry entry;
            entry.i = current_block;
            entry.j = parse_indexed(tokens[0], 'v', line_no);
            entry.a = parse_indexed(tokens[2], 'b', line_no);
            entry.line_no = line_no;
            bool expect_term = true;
            for (size_t t = 4; t < tokens.size(); ++t) {
                if (!expect_term) {
                    if (tokens[t] != "+")
                        throw ParseError("line " + std::to_string(line_no) +
                                         ": expected '+' between terms, got '" + tokens[t] + "'");
                    expect_term = true;
                    continue;
                }
                size_t star = tokens[t].find('*');
                if (star == std::string::npos || star == 0 || star + 1 >= tokens[t].size())
                    throw ParseError("line " + std::to_string(line_no) + ": expected '<coeff>*b<c>', got '" +
                                     tokens[t] + "'");
                Scalar coeff = parse_fraction(tokens[t].substr(0, star), line_no);
                int target = parse_indexed(tokens[t].substr(star + 1), 'b', line_no);
                entry.terms.emplace_back(coeff, target);
                expect_term = false;
            }
            if (expect_term)
                throw ParseError("line " + std::to_string(line_no) + ": dangling '+'");
            entries.push_back(std::move(entry));
        } else {
            throw ParseError("line " + std::to_string(line_no) + ": unknown directive '" + head +
                             "'");
        }
    }
    if (!saw_header) throw ParseError("empty input: missing 'formalgebra v1' header");
    if (d < 0) throw ParseError("missing 'd' directive");
    if (q < 0) throw ParseError("missing 'q' directive");
    if (h.empty()) throw ParseError("missing 'h' directive");
    if (h.size() >= 2 && h[1] != q)
        throw ParseError("h[1] = " + std::to_string(h[1]) + " contradicts q = " + std::to_string(q));
    int navail = static_cast<int>(h.size()) - 1;
    for (int block : seen_blocks)
        if (block < 1 || block >= navail)
            throw ParseError("mult block " + std::to_string(block) +
                             " outside the stored degree range 1.." + std::to_string(navail - 1));

    Field field = Field::rationals();
    std::vector<std::vector<ExactMatrix>> mult;
    for (int i = 1; i < navail; ++i) {
        std::vector<ExactMatrix> block;
        for (int j = 0; j < q; ++j) block.emplace_back(h[i + 1], h[i], field);
        mult.push_back(std::move(block));
    }
    for (const auto& entry : entries) {
        if (entry.j < 0 || entry.j >= q)
            throw ParseError("line " + std::to_string(entry.line_no) + ": v" +
                             std::to_string(entry.j) + " out of range");
        if (entry.a < 0 || entry.a >= h[entry.i])
            throw ParseError("line " + std::to_string(entry.line_no) + ": b" +
                             std::to_string(entry.a) + " out of range for degree " +
                             std::to_string(entry.i));
        ExactMatrix& m = mult[entry.i - 1][entry.j];
        for (const auto& [coeff, target] : entry.terms) {
            if (target < 0 || target >= h[entry.i + 1])
                throw ParseError("line " + std::to_string(entry.line_no) + ": target b" +
                                 std::to_string(target) + " out of range for degree " +
                                 std::to_string(entry.i + 1));
            m.set(target, entry.a, m.at(target, entry.a) + coeff);
        }
    }
    try {
        return FormAlgebra(d, std::move(h), std::move(mult));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("inconsistent algebra data: ") + e.what());
    }
}

FormAlgebra parse_form_algebra_text(const std::string& text) {
    std::istringstream is(text);
    return parse_form_algebra(is);
}

FormAlgebra load_form_algebra(const std::string& path) {
    if (path == "-") return parse_form_algebra(std::cin);
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return parse_form_algebra(in);
}

ExteriorElement parse_bivector_expression(const std::string& text, int ambient_dim,
                                          const Field& field) {
    std::string compact;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
    if (compact.empty()) throw ParseError("empty bivector expression");
    ExteriorElement out(ambient_dim, 2, field);
    size_t pos = 0;
    while (pos < compact.size()) {
        size_t next = compact.find('+', pos + 1);  // skip a leading sign character
        if (next == std::string::npos) next = compact.size();
        std::string term = compact.substr(pos, next - pos);
        pos = next + 1;
        Scalar coeff = field.one();
        size_t star = term.find('*');
        if (star != std::string::npos) {
            std::string lit = term.substr(0, star);
            if (!is_fraction_literal(lit)) throw ParseError("bad coefficient '" + lit + "'");
            if (field.kind() != ScalarKind::Rational)
                throw ParseError("fraction coefficients need a rational field");
            mpq_class value(lit);
            if (value.get_den() == 0) throw ParseError("zero denominator in '" + lit + "'");
            coeff = Scalar::rational(value);
            term = term.substr(star + 1);
        } else if (!term.empty() && term[0] == '-') {
            coeff = -coeff;
            term = term.substr(1);
        }
        size_t caret = term.find('^');
        if (caret == std::string::npos)
            throw ParseError("expected e<i>^e<j> in bivector term '" + term + "'");
        int i = parse_indexed(term.substr(0, caret), 'e', 0);
        int j = parse_indexed(term.substr(caret + 1), 'e', 0);
        if (i == j) throw ParseError("repeated index in bivector term '" + term + "'");
        out = out + ExteriorElement::basis(ambient_dim, {i, j}, field).scaled(coeff);
    }
    return out;
}

}  // namespace gbgg

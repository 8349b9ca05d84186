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

#include "multcode/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace multcode::io {

namespace {

std::string next_line(std::istream& is, const char* what) {
    std::string line;
    if (!std::getline(is, line)) throw ParseError(std::string("unexpected end of file, expected ") + what);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

std::uint64_t parse_u64(const std::string& token, const char* what) {
    try {
        std::size_t used = 0;
        if (token.empty() || token[0] == '-') throw std::invalid_argument(token);
        std::uint64_t v = std::stoull(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        return v;
    } catch (const std::exception&) {
        throw ParseError(std::string("bad ") + what + ": '" + token + "'");
    }
}

std::uint64_t parse_tagged(std::istream& is, const char* tag) {
    std::istringstream line(next_line(is, tag));
    std::string key, value, extra;
    line >> key >> value;
    if (key != tag || value.empty() || (line >> extra))
        throw ParseError(std::string("expected '") + tag + " <value>' line");
    return parse_u64(value, tag);
}

std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

}  // namespace

void write_word(std::ostream& os, const ReceivedWord& word) {
    const CodeParams& params = word.params();
    os << "mword/1\n";
    os << "p " << params.modulus() << "\n";
    os << "m " << params.dims() << "\n";
    os << "s " << params.s << "\n";
    os << "d " << params.d << "\n";
    for (int v = 0; v < params.dims(); ++v) {
        os << "set";
        for (const FieldElement& t : params.grid.axis(v)) os << ' ' << t.value();
        os << "\n";
    }
    const auto exps = monomials_below(params.dims(), params.s);
    for (std::size_t i = 0; i < word.size(); ++i) {
        const Jet& jet = word.symbol(i);
        bool first = true;
        for (const Exponents& e : exps) {
            if (!first) os << ' ';
            os << jet.coeff(e).value();
            first = false;
        }
        os << "\n";
    }
}

ReceivedWord read_word(std::istream& is) {
    if (next_line(is, "format tag") != "mword/1") throw ParseError("not an mword/1 file");
    const std::uint64_t p = parse_tagged(is, "p");
    const std::uint64_t m = parse_tagged(is, "m");
    const std::uint64_t s = parse_tagged(is, "s");
    const std::uint64_t d = parse_tagged(is, "d");
    if (m == 0 || m > 8) throw ParseError("dimension out of range");
    if (s == 0 || s > 64) throw ParseError("multiplicity order out of range");

    PrimeField field = [&] {
        try {
            return PrimeField(p);
        } catch (const std::exception& ex) {
            throw ParseError(std::string("bad modulus: ") + ex.what());
        }
    }();

    std::vector<std::vector<FieldElement>> sets;
    for (std::uint64_t v = 0; v < m; ++v) {
        auto tokens = split_ws(next_line(is, "evaluation set"));
        if (tokens.empty() || tokens[0] != "set") throw ParseError("expected 'set ...' line");
        std::vector<FieldElement> t;
        for (std::size_t i = 1; i < tokens.size(); ++i) {
            std::uint64_t val = parse_u64(tokens[i], "evaluation point");
            if (val >= p) throw ParseError("evaluation point out of range");
            t.push_back(field.element(val));
        }
        sets.push_back(std::move(t));
    }

    CodeParams params = [&] {
        try {
            return CodeParams(Grid(field, std::move(sets)), static_cast<int>(s),
                              static_cast<std::int64_t>(d));
        } catch (const std::exception& ex) {
            throw ParseError(std::string("bad code parameters: ") + ex.what());
        }
    }();

    const auto exps = monomials_below(params.dims(), params.s);
    const std::size_t count = params.grid.point_count();
    std::vector<Jet> symbols;
    symbols.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        auto tokens = split_ws(next_line(is, "jet record"));
        if (tokens.size() != exps.size()) throw ParseError("wrong coefficient count in record");
        Jet jet(field, params.dims(), params.s);
        for (std::size_t j = 0; j < tokens.size(); ++j) {
            std::uint64_t val = parse_u64(tokens[j], "jet coefficient");
            if (val >= p) throw ParseError("jet coefficient out of range");
            if (val != 0) jet.set_coeff(exps[j], field.element(val));
        }
        symbols.push_back(std::move(jet));
    }
    std::string tail;
    while (std::getline(is, tail)) {
        if (!tail.empty() && tail.back() == '\r') tail.pop_back();
        if (!tail.empty()) throw ParseError("trailing content after the last record");
    }
    return ReceivedWord(std::move(params), std::move(symbols));
}

void write_word_file(const std::string& path, const ReceivedWord& word) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw ParseError("cannot open '" + path + "' for writing");
    write_word(os, word);
    if (!os) throw ParseError("failed writing '" + path + "'");
}

ReceivedWord read_word_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw ParseError("cannot open '" + path + "'");
    return read_word(is);
}

void write_poly(std::ostream& os, const MultiPoly& poly) {
    for (const auto& [e, c] : poly.terms()) {
        for (std::uint32_t x : e) os << x << ' ';
        os << c.value() << "\n";
    }
}

MultiPoly read_poly(std::istream& is, const PrimeField& field, int vars) {
    MultiPoly out(field, vars);
    std::string line;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        auto tokens = split_ws(line);
        if (tokens.size() != static_cast<std::size_t>(vars) + 1)
            throw ParseError("term line needs m exponents and a value");
        Exponents e;
        for (int v = 0; v < vars; ++v) {
            std::uint64_t x = parse_u64(tokens[static_cast<std::size_t>(v)], "exponent");
            if (x > 100000) throw ParseError("exponent out of range");
            e.push_back(static_cast<std::uint32_t>(x));
        }
        std::uint64_t val = parse_u64(tokens.back(), "coefficient");
        if (val >= field.modulus()) throw ParseError("coefficient out of range");
        out.add_to_coeff(e, field.element(val));
    }
    return out;
}

void write_poly_file(const std::string& path, const MultiPoly& poly) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw ParseError("cannot open '" + path + "' for writing");
    write_poly(os, poly);
    if (!os) throw ParseError("failed writing '" + path + "'");
}

MultiPoly read_poly_file(const std::string& path, const PrimeField& field, int vars) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw ParseError("cannot open '" + path + "'");
    return read_poly(is, field, vars);
}

}  // namespace multcode::io

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

// multcode: encode, corrupt, decode and cross-check multiplicity codes on
// product sets, plus a Forney GMD demo over a concatenated code.
//
// Exit codes: 0 success, 1 decoding failure (no codeword in radius),
// 2 malformed input or bad parameters.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "multcode/gmd.hpp"
#include "multcode/io.hpp"
#include "multcode/mvdec.hpp"
#include "multcode/oracle.hpp"
#include "multcode/unidec.hpp"

using namespace multcode;

namespace {

using Rng = std::mt19937_64;

constexpr int exit_ok = 0;
constexpr int exit_decode_fail = 1;
constexpr int exit_bad_input = 2;

std::vector<std::vector<FieldElement>> parse_sets(const std::string& spec, const PrimeField& field,
                                                  int dims) {
    std::string text = spec;
    if (std::filesystem::exists(spec)) {
        std::ifstream is(spec);
        std::ostringstream ss;
        std::string line;
        bool first = true;
        while (std::getline(is, line)) {
            if (line.empty()) continue;
            if (!first) ss << ';';
            ss << line;
            first = false;
        }
        text = ss.str();
    }
    std::vector<std::vector<FieldElement>> sets;
    std::istringstream axes(text);
    std::string axis;
    while (std::getline(axes, axis, ';')) {
        std::vector<FieldElement> t;
        std::istringstream values(axis);
        std::string tok;
        while (std::getline(values, tok, ',')) {
            std::istringstream ws(tok);
            std::string v;
            while (ws >> v) t.push_back(field.element(std::stoull(v)));
        }
        if (!t.empty()) sets.push_back(std::move(t));
    }
    if (sets.size() == 1 && dims > 1) sets.assign(static_cast<std::size_t>(dims), sets[0]);
    for (auto& t : sets) {
        std::sort(t.begin(), t.end(),
                  [](const FieldElement& a, const FieldElement& b) { return a.value() < b.value(); });
    }
    return sets;
}

int cmd_encode(const std::string& sets_spec, std::uint64_t prime, int dims, int order,
               std::int64_t degree, const std::string& poly_path, const std::string& out_path) {
    PrimeField field(prime);
    CodeParams params(Grid(field, parse_sets(sets_spec, field, dims)), order, degree);
    MultiPoly poly = io::read_poly_file(poly_path, field, dims);
    io::write_word_file(out_path, encode(poly, params));
    return exit_ok;
}

int cmd_corrupt(const std::string& in_path, const std::string& out_path, std::uint64_t seed,
                std::int64_t budget, std::int64_t symbols, const std::string& mode) {
    ReceivedWord word = io::read_word_file(in_path);
    const CodeParams& params = word.params();
    const PrimeField field(params.modulus());
    const int s = params.s;
    const std::int64_t points = static_cast<std::int64_t>(word.size());
    Rng rng(seed);

    std::int64_t targets = 0;
    if (symbols >= 0) {
        targets = symbols;
    } else if (budget >= 0) {
        targets = mode == "symbol" ? budget / s : budget;
    } else {
        throw std::invalid_argument("one of --budget or --symbols is required");
    }
    if ((mode == "symbol" && targets > points) ||
        (mode == "lowdeg" && budget > points * s)) {
        std::cerr << "corruption budget unreachable on this grid\n";
        return exit_bad_input;
    }

    std::vector<std::size_t> order(word.size());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    const auto exps = monomials_below(params.dims(), s);
    auto random_nonzero = [&] {
        return field.element(1 + rng() % (field.modulus() - 1));
    };

    ReceivedWord noisy = word;
    if (mode == "symbol") {
        for (std::int64_t i = 0; i < targets; ++i) {
            std::size_t idx = order[static_cast<std::size_t>(i)];
            Jet jet(field, params.dims(), s);
            for (const Exponents& e : exps)
                jet.set_coeff(e, field.element(rng() % field.modulus()));
            // the constant term must move, so the whole symbol costs s
            Exponents zero(static_cast<std::size_t>(params.dims()), 0);
            jet.set_coeff(zero, word.symbol(idx).coeff(zero) + random_nonzero());
            noisy.set_symbol(idx, std::move(jet));
        }
    } else if (mode == "lowdeg") {
        std::int64_t remaining = symbols >= 0 ? symbols * s : budget;
        std::size_t next = 0;
        while (remaining > 0) {
            std::int64_t cost = std::min<std::int64_t>(s, remaining);
            int cutoff = s - static_cast<int>(cost);
            std::size_t idx = order[next++];
            Jet jet = noisy.symbol(idx);
            bool forced = false;
            for (const Exponents& e : exps) {
                if (degree_of(e) < cutoff) continue;
                if (degree_of(e) == cutoff && !forced) {
                    jet.set_coeff(e, jet.coeff(e) + random_nonzero());
                    forced = true;
                } else if (rng() % 2 == 0) {
                    jet.set_coeff(e, field.element(rng() % field.modulus()));
                }
            }
            noisy.set_symbol(idx, std::move(jet));
            remaining -= cost;
        }
    } else {
        throw std::invalid_argument("mode must be 'symbol' or 'lowdeg'");
    }

    std::cerr << "achieved delta_mult: " << delta_mult(word, noisy) << "\n";
    io::write_word_file(out_path, noisy);
    return exit_ok;
}

int cmd_decode(const std::string& in_path, const std::string& out_path) {
    ReceivedWord word = io::read_word_file(in_path);
    const CodeParams& params = word.params();
    std::optional<MultiPoly> result;
    if (params.dims() == 1) {
        std::vector<int> svec(word.size(), params.s);
        std::vector<Jet> jets;
        for (std::size_t i = 0; i < word.size(); ++i) jets.push_back(word.symbol(i));
        auto r = decode(UniDecodeInstance(params.grid.axis(0), params.d, svec, jets));
        if (r) result = MultiPoly::from_univariate(*r);
    } else {
        result = decode(word);
    }
    if (!result) {
        std::cerr << "no codeword within the unique decoding radius\n";
        return exit_decode_fail;
    }
    io::write_poly_file(out_path, *result);
    return exit_ok;
}

int cmd_oracle(const std::string& in_path) {
    ReceivedWord word = io::read_word_file(in_path);
    PolySpace space(word.params());
    NearestResult near = nearest_codeword(word, space);
    io::write_poly(std::cout, near.poly);
    std::cout << "distance: " << near.dist << "\n";
    std::cout << "radius: " << unique_decoding_radius(word.params()) << "\n";
    std::cout << "unique: " << (near.unique ? "yes" : "no") << "\n";
    return exit_ok;
}

int cmd_szsweep(std::uint64_t prime, int dims, std::int64_t n, int order, std::int64_t degree,
                std::int64_t trials, std::uint64_t seed) {
    PrimeField field(prime);
    std::vector<FieldElement> axis;
    for (std::int64_t i = 0; i < n; ++i) axis.push_back(field.element(static_cast<std::uint64_t>(i)));
    CodeParams params(Grid(field, std::vector<std::vector<FieldElement>>(
                                      static_cast<std::size_t>(dims), axis)),
                      order, degree);
    std::int64_t bound = 1;
    for (int i = 1; i < dims; ++i) bound *= n;
    bound *= order * n - degree;

    std::int64_t min_seen = -1, violations = 0, done = 0;
    for (std::int64_t t = 0; done < trials; ++t) {
        Rng rng(seed + static_cast<std::uint64_t>(t));  // per-trial stream
        MultiPoly p(field, dims), q(field, dims);
        for (const Exponents& e : monomials_up_to(dims, degree)) {
            p.set_coeff(e, field.element(rng() % prime));
            q.set_coeff(e, field.element(rng() % prime));
        }
        if (p == q) continue;
        ++done;
        ReceivedWord ep = encode(p, params), eq = encode(q, params);
        std::int64_t dist = delta_mult(ep, eq);
        if (min_seen < 0 || dist < min_seen) min_seen = dist;
        if (dist < bound || dist > order * hamming(ep, eq)) ++violations;
    }
    std::cout << "trials: " << trials << "\n";
    std::cout << "bound: " << bound << "\n";
    std::cout << "min delta_mult: " << min_seen << "\n";
    std::cout << "violations: " << violations << "\n";
    return violations == 0 ? exit_ok : exit_decode_fail;
}

int cmd_bench(std::uint64_t prime, int dims, std::int64_t n, int order, std::int64_t degree,
              std::int64_t trials, std::uint64_t seed) {
    PrimeField field(prime);
    std::vector<FieldElement> axis;
    for (std::int64_t i = 0; i < n; ++i) axis.push_back(field.element(static_cast<std::uint64_t>(i)));
    CodeParams params(Grid(field, std::vector<std::vector<FieldElement>>(
                                      static_cast<std::size_t>(dims), axis)),
                      order, degree);
    std::int64_t scale = 1;
    for (int i = 1; i < dims; ++i) scale *= n;
    std::int64_t budget = (scale * (order * n - degree) - 1) / 2;  // just inside the radius

    double total_ms = 0;
    for (std::int64_t t = 0; t < trials; ++t) {
        Rng rng(seed + static_cast<std::uint64_t>(t));
        MultiPoly p(field, dims);
        for (const Exponents& e : monomials_up_to(dims, degree))
            p.set_coeff(e, field.element(rng() % prime));
        ReceivedWord word = encode(p, params);
        // full-symbol corruption just below the radius
        std::vector<std::size_t> idx(word.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::shuffle(idx.begin(), idx.end(), rng);
        for (std::int64_t i = 0; i < budget / order; ++i) {
            Jet jet = word.symbol(idx[static_cast<std::size_t>(i)]);
            Exponents zero(static_cast<std::size_t>(dims), 0);
            jet.set_coeff(zero, jet.coeff(zero) + field.element(1 + rng() % (prime - 1)));
            word.set_symbol(idx[static_cast<std::size_t>(i)], std::move(jet));
        }
        auto start = std::chrono::steady_clock::now();
        auto got = decode(word);
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                        .count();
        total_ms += ms;
        std::cout << "trial " << t << ": " << ms << " ms, "
                  << (got && *got == p ? "recovered" : "MISSED") << "\n";
    }
    std::cout << "mean: " << total_ms / static_cast<double>(trials) << " ms over " << trials
              << " decodes\n";
    return exit_ok;
}

ConcatCode build_gmd_code(std::uint64_t pout, std::uint64_t q, std::int64_t k, std::int64_t blocks,
                          std::int64_t dim, const std::string& inner_path, std::int64_t din) {
    PrimeField outer_field(pout), inner_field(q);
    if (blocks > static_cast<std::int64_t>(pout))
        throw std::invalid_argument("outer block count exceeds the outer field size");
    std::vector<FieldElement> eval;
    for (std::int64_t i = 0; i < blocks; ++i)
        eval.push_back(outer_field.element(static_cast<std::uint64_t>(i)));
    RsOuterParams outer(outer_field, eval, dim);

    std::vector<std::vector<FieldElement>> gen;
    if (inner_path.empty()) {
        // systematic parity code [k+1, k, 2]
        for (std::int64_t r = 0; r < k; ++r) {
            std::vector<FieldElement> row(static_cast<std::size_t>(k) + 1, inner_field.zero());
            row[static_cast<std::size_t>(r)] = inner_field.one();
            row.back() = inner_field.one();
            gen.push_back(std::move(row));
        }
    } else {
        std::ifstream is(inner_path);
        if (!is) throw std::invalid_argument("cannot open inner generator file");
        std::string line;
        while (std::getline(is, line)) {
            if (line.empty() || line[0] == '#') continue;
            std::vector<FieldElement> row;
            std::istringstream ss(line);
            std::uint64_t v;
            while (ss >> v) row.push_back(inner_field.element(v));
            if (!row.empty()) gen.push_back(std::move(row));
        }
    }
    return ConcatCode(outer, inner_field, gen, din);
}

int cmd_gmd(const ConcatCode& code, const std::string& msg_csv, std::int64_t flips,
            std::uint64_t seed, std::int64_t sweep) {
    const PrimeField outer_field(code.outer().modulus);
    const PrimeField inner_field(code.inner_modulus());
    if (sweep >= 0) {
        const std::size_t bits =
            static_cast<std::size_t>(code.outer().block_count() * code.inner_length());
        if (bits > 24) throw std::invalid_argument("sweep is limited to 24 total symbols");
        std::uint64_t tried = 0, recovered = 0, wrong = 0;
        for (std::uint64_t mv = 0; mv < code.outer().modulus; ++mv) {
            std::vector<FieldElement> msg(static_cast<std::size_t>(code.outer().dimension),
                                          outer_field.zero());
            msg[0] = outer_field.element(mv);
            GmdReceived sent = concat_encode(msg, code);
            for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << bits); ++mask) {
                if (__builtin_popcountll(mask) > sweep) continue;
                GmdReceived noisy = sent;
                for (std::size_t b = 0; b < bits; ++b)
                    if (mask & (std::uint64_t(1) << b))
                        noisy[b / static_cast<std::size_t>(code.inner_length())]
                             [b % static_cast<std::size_t>(code.inner_length())] +=
                            inner_field.one();
                auto got = gmd_decode(noisy, code);
                ++tried;
                if (got && *got == msg)
                    ++recovered;
                else if (got)
                    ++wrong;
            }
        }
        std::cout << "patterns: " << tried << "\nrecovered: " << recovered
                  << "\nother codeword: " << wrong << "\nfailed: " << (tried - recovered - wrong)
                  << "\n";
        return exit_ok;
    }

    std::vector<FieldElement> msg;
    std::istringstream ss(msg_csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) msg.push_back(outer_field.element(std::stoull(tok)));
    if (static_cast<std::int64_t>(msg.size()) != code.outer().dimension)
        throw std::invalid_argument("message length must equal K");

    GmdReceived sent = concat_encode(msg, code);
    GmdReceived noisy = sent;
    Rng rng(seed);
    const std::size_t bits =
        static_cast<std::size_t>(code.outer().block_count() * code.inner_length());
    std::vector<std::size_t> order(bits);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    for (std::int64_t i = 0; i < flips && i < static_cast<std::int64_t>(bits); ++i) {
        std::size_t b = order[static_cast<std::size_t>(i)];
        auto& cell = noisy[b / static_cast<std::size_t>(code.inner_length())]
                          [b % static_cast<std::size_t>(code.inner_length())];
        cell += inner_field.element(1 + rng() % (code.inner_modulus() - 1));
    }

    std::cout << "sent:";
    for (const auto& block : sent) {
        std::cout << ' ';
        for (const auto& x : block) std::cout << x.value();
    }
    std::cout << "\nreceived:";
    for (const auto& block : noisy) {
        std::cout << ' ';
        for (const auto& x : block) std::cout << x.value();
    }
    std::cout << "\n";
    auto got = gmd_decode(noisy, code);
    if (!got) {
        std::cout << "decoded: (no codeword within the radius)\n";
        return exit_decode_fail;
    }
    std::cout << "decoded:";
    for (const auto& x : *got) std::cout << ' ' << x.value();
    std::cout << "\nmatch: " << (*got == msg ? "yes" : "no") << "\n";
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multiplicity codes on product sets: encoder, decoders, channel tools"};
    app.require_subcommand(1);

    // encode
    auto* enc = app.add_subcommand("encode", "encode a message polynomial into an mword file");
    std::uint64_t prime = 13;
    int dims = 2, order = 2;
    std::int64_t degree = 5;
    std::string sets_spec, poly_path, out_path, in_path;
    enc->add_option("--prime", prime, "field modulus (prime)")->required();
    enc->add_option("--m", dims, "number of variables")->required();
    enc->add_option("--s", order, "multiplicity order")->required();
    enc->add_option("--d", degree, "degree bound")->required();
    enc->add_option("--sets", sets_spec,
                    "evaluation sets: 'a,b,c;d,e,f' inline (one group per axis, a single group is "
                    "reused for all axes) or a file with one axis per line")
        ->required();
    enc->add_option("--poly", poly_path, "coefficient file: 'e_1 .. e_m value' per term")->required();
    enc->add_option("--out", out_path, "output mword file")->required();

    // corrupt
    auto* cor = app.add_subcommand("corrupt", "add channel noise to an mword file");
    std::uint64_t seed = 0;
    std::int64_t budget = -1, symbols = -1;
    std::string mode = "symbol";
    cor->add_option("--in", in_path, "input mword file")->required();
    cor->add_option("--out", out_path, "output mword file")->required();
    cor->add_option("--seed", seed, "PRNG seed (default 0)");
    cor->add_option("--budget", budget, "corruption budget in delta_mult units");
    cor->add_option("--symbols", symbols, "number of whole symbols to corrupt");
    cor->add_option("--mode", mode, "'symbol' replaces whole jets, 'lowdeg' perturbs only "
                                    "coefficients of z-degree >= s - remaining cost");

    // decode
    auto* dec = app.add_subcommand("decode", "uniquely decode an mword file");
    dec->add_option("--in", in_path, "input mword file")->required();
    dec->add_option("--out", out_path, "output coefficient file")->required();

    // oracle
    auto* ora = app.add_subcommand("oracle", "brute-force nearest codeword of an mword file");
    ora->add_option("--in", in_path, "input mword file")->required();

    // szsweep
    auto* sz = app.add_subcommand("szsweep", "check the multiplicity SZ distance bound on random pairs");
    std::int64_t trials = 1000, n_axis = 6;
    sz->add_option("--trials", trials, "number of random pairs");
    sz->add_option("--prime", prime, "field modulus");
    sz->add_option("--m", dims, "number of variables");
    sz->add_option("--n", n_axis, "axis size (grid {0..n-1}^m)");
    sz->add_option("--s", order, "multiplicity order");
    sz->add_option("--d", degree, "degree bound");
    sz->add_option("--seed", seed, "PRNG seed");

    // bench
    auto* ben = app.add_subcommand("bench", "time decodes on planted instances");
    ben->add_option("--n", n_axis, "axis size")->required();
    ben->add_option("--s", order, "multiplicity order")->required();
    ben->add_option("--m", dims, "number of variables")->required();
    ben->add_option("--d", degree, "degree bound")->required();
    ben->add_option("--trials", trials, "number of decodes")->required();
    ben->add_option("--prime", prime, "field modulus");
    ben->add_option("--seed", seed, "PRNG seed");

    // gmd
    auto* gm = app.add_subcommand("gmd", "Forney GMD decoding of a concatenated code");
    std::uint64_t pout = 3, qin = 2;
    std::int64_t k_in = 2, blocks = 3, out_dim = 1, din = 2, flips = 0, sweep = -1;
    std::string msg_csv = "1", inner_path;
    gm->add_option("--pout", pout, "outer prime field (default 3)");
    gm->add_option("--q", qin, "inner prime field (default 2)");
    gm->add_option("--k", k_in, "inner dimension (default 2; parity code [k+1,k,2])");
    gm->add_option("--N", blocks, "outer block count (default 3)");
    gm->add_option("--K", out_dim, "outer dimension (default 1)");
    gm->add_option("--din", din, "declared inner distance (verified; default 2)");
    gm->add_option("--inner", inner_path, "generator matrix file (k rows over GF(q))");
    gm->add_option("--msg", msg_csv, "comma-separated outer message symbols");
    gm->add_option("--flips", flips, "random symbol flips to apply");
    gm->add_option("--seed", seed, "PRNG seed");
    gm->add_option("--sweep", sweep, "exhaustive sweep over error patterns up to this weight");

    CLI11_PARSE(app, argc, argv);

    try {
        if (enc->parsed()) return cmd_encode(sets_spec, prime, dims, order, degree, poly_path, out_path);
        if (cor->parsed()) return cmd_corrupt(in_path, out_path, seed, budget, symbols, mode);
        if (dec->parsed()) return cmd_decode(in_path, out_path);
        if (ora->parsed()) return cmd_oracle(in_path);
        if (sz->parsed()) return cmd_szsweep(prime, dims, n_axis, order, degree, trials, seed);
        if (ben->parsed()) return cmd_bench(prime, dims, n_axis, order, degree, trials, seed);
        if (gm->parsed())
            return cmd_gmd(build_gmd_code(pout, qin, k_in, blocks, out_dim, inner_path, din),
                           msg_csv, flips, seed, sweep);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return exit_bad_input;
    }
    return exit_bad_input;
}

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

// End-to-end verification suite. Each criterion prints one pass/fail line;
// run with a criterion number to execute just that one.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <string>
#include <vector>

#include "multcode/gmd.hpp"
#include "multcode/mvdec.hpp"
#include "multcode/oracle.hpp"
#include "multcode/unidec.hpp"
#include "multcode/wdec.hpp"
#include "test_util.hpp"

using namespace multcode;
using testutil::Rng;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// 1. 200 bivariate trials at p=13, n=6, s=2, d=5 with corruption <= 20.
bool criterion_unique_decoding(std::string& detail) {
    PrimeField field(13);
    CodeParams params(testutil::range_grid(field, 2, 6), 2, 5);
    if (unique_decoding_radius(params) != HalfInt::from_int(21)) {
        detail = "radius mismatch";
        return false;
    }
    Rng rng(2026);
    int good = 0;
    const int trials = 200;
    auto start = std::chrono::steady_clock::now();
    for (int t = 0; t < trials; ++t) {
        MultiPoly p = testutil::random_poly(field, 2, 5, rng);
        std::int64_t budget = (t % 2 == 0) ? 20 : static_cast<std::int64_t>(rng() % 21);
        ReceivedWord noisy = testutil::corrupt_exact(encode(p, params), budget, rng);
        auto got = decode(noisy);
        if (got && *got == p) ++good;
    }
    double elapsed = seconds_since(start);
    detail = std::to_string(good) + "/" + std::to_string(trials) + " recovered in " +
             std::to_string(elapsed) + "s";
    return good == trials && elapsed < 300.0;
}

// 2. 50 trivariate trials at p=13, n=4, s=2, d=3 with corruption <= 39.
bool criterion_multivariate(std::string& detail) {
    PrimeField field(13);
    CodeParams params(testutil::range_grid(field, 3, 4), 2, 3);
    if (unique_decoding_radius(params) != HalfInt::from_int(40)) {
        detail = "radius mismatch";
        return false;
    }
    Rng rng(2027);
    int good = 0;
    const int trials = 50;
    auto start = std::chrono::steady_clock::now();
    for (int t = 0; t < trials; ++t) {
        MultiPoly p = testutil::random_poly(field, 3, 3, rng);
        std::int64_t budget = (t % 2 == 0) ? 39 : static_cast<std::int64_t>(rng() % 40);
        ReceivedWord noisy = testutil::corrupt_exact(encode(p, params), budget, rng);
        auto got = decode(noisy);
        if (got && *got == p) ++good;
    }
    double elapsed = seconds_since(start);
    detail = std::to_string(good) + "/" + std::to_string(trials) + " recovered in " +
             std::to_string(elapsed) + "s";
    return good == trials && elapsed < 600.0;
}

// 3. 200 arbitrary words at p=3, n=3, s=2, d=2: decoder verdict must match
// the exhaustive oracle exactly.
bool criterion_oracle_equivalence(std::string& detail) {
    PrimeField field(3);
    CodeParams params(testutil::range_grid(field, 2, 3), 2, 2);
    PolySpace space(params);
    const HalfInt radius = unique_decoding_radius(params);
    Rng rng(2028);
    const auto exps = monomials_below(2, 2);
    int mismatches = 0;
    for (int t = 0; t < 200; ++t) {
        ReceivedWord w(params);
        if (t % 2 == 0) {
            for (std::size_t i = 0; i < w.size(); ++i) {
                Jet jet(field, 2, 2);
                for (const Exponents& e : exps) jet.set_coeff(e, testutil::random_element(field, rng));
                w.set_symbol(i, std::move(jet));
            }
        } else {
            w = testutil::corrupt_exact(encode(space.poly_at(rng() % space.size()), params),
                                        static_cast<std::int64_t>(rng() % 13), rng);
        }
        auto verdict = nearest_codeword(w, space);
        auto got = decode(w);
        bool should_decode = HalfInt::from_int(verdict.dist) < radius;
        if (should_decode != got.has_value()) ++mismatches;
        else if (got && *got != verdict.poly) ++mismatches;
    }
    detail = std::to_string(mismatches) + " mismatches over 200 words";
    return mismatches == 0;
}

// 4. Exhaustive univariate check over GF(5), |T| = 4, e = 1, for three
// multiplicity profiles: every word in radius decodes to the unique
// codeword, and nothing outside is ever accepted.
bool criterion_univariate_exhaustive(std::string& detail) {
    PrimeField field(5);
    std::vector<FieldElement> pts{field.element(0), field.element(1), field.element(2),
                                  field.element(3)};
    const std::int64_t e = 1;
    std::vector<std::vector<int>> profiles{{1, 1, 1, 1}, {2, 2, 1, 1}, {2, 1, 1, 0}};

    // all 25 candidate polynomials with their encodings per profile
    std::vector<UniPoly> candidates;
    for (std::uint64_t c0 = 0; c0 < 5; ++c0)
        for (std::uint64_t c1 = 0; c1 < 5; ++c1)
            candidates.push_back(UniPoly::from_values(field, {c0, c1}));

    std::uint64_t words = 0, failures = 0, wrong_accepts = 0;
    for (const auto& svec : profiles) {
        const std::int64_t total = std::accumulate(svec.begin(), svec.end(), std::int64_t{0});
        std::vector<std::vector<Jet>> encodings;
        for (const auto& cand : candidates) encodings.push_back(encode_varying(cand, pts, svec));

        // enumerate every received word over the N-dimensional jet space
        std::uint64_t count = 1;
        for (std::int64_t i = 0; i < total; ++i) count *= 5;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            std::uint64_t rest = idx;
            std::vector<Jet> jets;
            for (std::size_t i = 0; i < pts.size(); ++i) {
                Jet jet(field, 1, svec[i]);
                for (int k = 0; k < svec[i]; ++k) {
                    jet.set_coeff({static_cast<std::uint32_t>(k)}, field.element(rest % 5));
                    rest /= 5;
                }
                jets.push_back(std::move(jet));
            }
            UniDecodeInstance inst(pts, e, svec, jets);
            auto got = decode(inst);
            ++words;

            int in_radius = -1;
            for (std::size_t c = 0; c < candidates.size(); ++c) {
                if (2 * delta_mult_varying(jets, encodings[c], svec) < total - e) {
                    in_radius = static_cast<int>(c);
                    break;  // at most one by the distance bound
                }
            }
            if (in_radius >= 0) {
                if (!got || *got != candidates[static_cast<std::size_t>(in_radius)]) ++failures;
            } else if (got) {
                ++wrong_accepts;
            }
        }
    }
    detail = std::to_string(words) + " words, " + std::to_string(failures) + " missed, " +
             std::to_string(wrong_accepts) + " wrong accepts";
    return failures == 0 && wrong_accepts == 0;
}

// 5. 1000 random distinct pairs at the criterion-1 parameters: the SZ bound
// delta >= 42 and delta <= s * hamming.
bool criterion_sz_invariant(std::string& detail) {
    PrimeField field(13);
    CodeParams params(testutil::range_grid(field, 2, 6), 2, 5);
    Rng rng(2029);
    std::int64_t min_seen = -1;
    int violations = 0;
    int pairs = 0;
    while (pairs < 1000) {
        MultiPoly p = testutil::random_poly(field, 2, 5, rng);
        MultiPoly q = testutil::random_poly(field, 2, 5, rng);
        if (p == q) continue;
        ++pairs;
        ReceivedWord ep = encode(p, params), eq = encode(q, params);
        std::int64_t dist = delta_mult(ep, eq);
        if (min_seen < 0 || dist < min_seen) min_seen = dist;
        if (dist < 42) ++violations;
        if (dist > 2 * hamming(ep, eq)) ++violations;
    }
    detail = "min delta_mult " + std::to_string(min_seen) + ", " + std::to_string(violations) +
             " violations";
    return violations == 0;
}

// 6. 1000 random weighted instances with r in {1,2}, m=2: the triangle
// inequality 2G(g,Q) + 2G(g,R) >= 2n(sn-d) holds exactly.
bool criterion_gamma_triangle(std::string& detail) {
    Rng rng(2030);
    PrimeField field(13);
    int checked = 0, violations = 0;
    while (checked < 1000) {
        std::int64_t n = 3 + static_cast<std::int64_t>(rng() % 5);
        int s = 1 + static_cast<int>(rng() % 3);
        std::int64_t d = static_cast<std::int64_t>(rng() % (s * n));
        std::int64_t ell = static_cast<std::int64_t>(rng() % (d + 1));
        int r = s - static_cast<int>((d - ell) / n);
        if (r < 1 || r > 2) continue;
        std::vector<FieldElement> pts;
        for (std::int64_t i = 0; i < n; ++i) pts.push_back(field.element(i));

        std::vector<Jet> g;
        for (std::int64_t i = 0; i < n; ++i) {
            Jet jet(field, 1, r);
            for (int k = 0; k < r; ++k)
                jet.set_coeff({static_cast<std::uint32_t>(k)}, testutil::random_element(field, rng));
            g.push_back(std::move(jet));
        }
        WeightedInstance probe(pts, d, s, 2, ell, r, g,
                               std::vector<std::vector<HalfInt>>(static_cast<std::size_t>(n),
                                                                 std::vector<HalfInt>(static_cast<std::size_t>(r))));
        std::vector<std::vector<HalfInt>> w(static_cast<std::size_t>(n));
        for (auto& row : w)
            for (int i = 0; i < r; ++i)
                row.push_back(HalfInt::from_twice(static_cast<std::int64_t>(
                    rng() % static_cast<std::uint64_t>(probe.weight_cap(i).twice() + 1))));
        WeightedInstance inst(pts, d, s, 2, ell, r, g, w);

        UniPoly q_poly = testutil::random_unipoly(field, ell, rng);
        UniPoly r_poly = testutil::random_unipoly(field, ell, rng);
        if (q_poly == r_poly) continue;
        ++checked;
        if (gamma(inst, q_poly).twice() + gamma(inst, r_poly).twice() < 2 * n * (s * n - d))
            ++violations;
    }
    detail = std::to_string(violations) + " violations over 1000 instances";
    return violations == 0;
}

// 7. The hard corruption pattern: level-1 data consistently moved to a
// different codeword (distrust 0), level-0 lightly corrupted (distrust
// |B|). Only a non-uniform step threshold decodes it.
bool criterion_hard_instance(std::string& detail) {
    PrimeField field(17);
    const std::int64_t n = 9, d = 7;
    CodeParams params(testutil::range_grid(field, 2, n), 2, d);
    Rng rng(2031);
    int good = 0;
    const int trials = 20;
    for (int t = 0; t < trials; ++t) {
        MultiPoly p = testutil::random_poly(field, 2, d, rng);
        p.set_coeff({0, static_cast<std::uint32_t>(d)}, testutil::random_nonzero(field, rng));

        // |B| = ceil((n/2)(1 - d/2n)) - 1 = 2 rows; D vanishes off B
        std::vector<std::uint64_t> b_rows{3, 7};
        UniPoly shift = UniPoly::from_values(field, {testutil::random_nonzero(field, rng).value()});
        for (std::uint64_t row = 0; row < static_cast<std::uint64_t>(n); ++row) {
            bool in_b = false;
            for (auto b : b_rows) in_b = in_b || b == row;
            if (!in_b)
                shift = shift * UniPoly(field.modulus(),
                                        {-field.element(row), field.element(1)});
        }

        ReceivedWord noisy = encode(p, params);
        for (std::int64_t ai = 0; ai < n; ++ai) {
            for (std::uint64_t row : b_rows) {
                std::size_t idx = static_cast<std::size_t>(ai) * n + row;
                Jet jet = noisy.symbol(idx);
                // move the whole level-1 column onto a wrong codeword
                jet.set_coeff({1, 0}, jet.coeff({1, 0}) + shift.eval(field.element(row)));
                // and add a light level-0 corruption at z2-degree 1
                jet.set_coeff({0, 1}, jet.coeff({0, 1}) + testutil::random_nonzero(field, rng));
                noisy.set_symbol(idx, std::move(jet));
            }
        }
        std::int64_t dist = delta_mult(noisy, encode(p, params));
        if (2 * dist >= n * (2 * n - d)) {
            detail = "constructed corruption leaves the radius";
            return false;
        }
        auto got = decode(noisy);
        if (got && *got == p) ++good;
    }
    detail = std::to_string(good) + "/" + std::to_string(trials) + " hard instances recovered";
    return good == trials;
}

// 8. Forney GMD at p_out=3 with the [3,2,2] parity code: every pattern of
// weight <= 2 recovers, nothing wrong is accepted at weight 3.
bool criterion_gmd(std::string& detail) {
    PrimeField f3(3), f2(2);
    RsOuterParams outer(f3, {f3.element(0), f3.element(1), f3.element(2)}, 1);
    ConcatCode code(outer, f2,
                    {{f2.element(1), f2.element(0), f2.element(1)},
                     {f2.element(0), f2.element(1), f2.element(1)}},
                    2);

    const std::size_t bits = 9;
    std::uint64_t patterns = 0, failures = 0, wrong_accepts = 0;
    for (std::uint64_t msg_val = 0; msg_val < 3; ++msg_val) {
        std::vector<FieldElement> msg{f3.element(msg_val)};
        GmdReceived sent = concat_encode(msg, code);
        for (std::uint64_t mask = 0; mask < (1u << bits); ++mask) {
            int weight = __builtin_popcount(static_cast<unsigned>(mask));
            if (weight > 3) continue;
            GmdReceived noisy = sent;
            for (std::size_t b = 0; b < bits; ++b)
                if (mask & (1u << b)) noisy[b / 3][b % 3] += f2.element(1);
            auto got = gmd_decode(noisy, code);
            ++patterns;
            if (weight <= 2) {
                if (!got || *got != msg) ++failures;
            } else if (got) {
                GmdReceived re = concat_encode(*got, code);
                std::int64_t dist = 0;
                for (std::size_t i = 0; i < noisy.size(); ++i)
                    for (std::size_t j = 0; j < noisy[i].size(); ++j)
                        if (noisy[i][j] != re[i][j]) ++dist;
                if (2 * dist >= 6) ++wrong_accepts;
            }
        }
    }
    detail = std::to_string(patterns) + " patterns, " + std::to_string(failures) + " missed, " +
             std::to_string(wrong_accepts) + " wrong accepts";
    return failures == 0 && wrong_accepts == 0;
}

// 9. Wall-clock budgets: one bivariate decode at n=8, s=2 under 30s and one
// at n=6, s=3 under 10 minutes.
bool criterion_runtime(std::string& detail) {
    Rng rng(2032);
    PrimeField f17(17);
    CodeParams fast(testutil::range_grid(f17, 2, 8), 2, 9);
    MultiPoly p1 = testutil::random_poly(f17, 2, 9, rng);
    ReceivedWord w1 = testutil::corrupt_exact(encode(p1, fast), 20, rng);
    auto start1 = std::chrono::steady_clock::now();
    auto got1 = decode(w1);
    double t1 = seconds_since(start1);

    PrimeField f19(19);
    CodeParams slow(testutil::range_grid(f19, 2, 6), 3, 8);
    MultiPoly p2 = testutil::random_poly(f19, 2, 8, rng);
    ReceivedWord w2 = testutil::corrupt_exact(encode(p2, slow), 20, rng);
    auto start2 = std::chrono::steady_clock::now();
    auto got2 = decode(w2);
    double t2 = seconds_since(start2);

    detail = "n=8,s=2: " + std::to_string(t1) + "s; n=6,s=3: " + std::to_string(t2) + "s";
    bool correct = got1 && *got1 == p1 && got2 && *got2 == p2;
    return correct && t1 < 30.0 && t2 < 600.0;
}

struct Criterion {
    const char* name;
    bool (*run)(std::string&);
};

const Criterion criteria[] = {
    {"unique decoding at p=13, m=2, n=6, s=2, d=5 (radius 21, 200 trials)", criterion_unique_decoding},
    {"multivariate decoding at p=13, m=3, n=4, s=2, d=3 (radius 40, 50 trials)", criterion_multivariate},
    {"oracle equivalence at p=3, m=2, n=3, s=2, d=2 (200 words)", criterion_oracle_equivalence},
    {"univariate varying-multiplicity decoder, exhaustive over GF(5)", criterion_univariate_exhaustive},
    {"multiplicity SZ invariant, 1000 pairs (bound 42)", criterion_sz_invariant},
    {"gamma triangle inequality, 1000 weighted instances", criterion_gamma_triangle},
    {"hard-instance regression (non-uniform step thresholds)", criterion_hard_instance},
    {"GMD decoding, exhaustive error sweep (radius 3)", criterion_gmd},
    {"runtime budgets (n=8,s=2 under 30s; n=6,s=3 under 10min)", criterion_runtime},
};

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    if (argc > 1) {
        only = std::atoi(argv[1]);
        if (only < 1 || only > 9) {
            std::fprintf(stderr, "usage: %s [criterion 1-9]\n", argv[0]);
            return 2;
        }
    }
    bool all_ok = true;
    for (int i = 1; i <= 9; ++i) {
        if (only != 0 && i != only) continue;
        std::string detail;
        bool ok = criteria[i - 1].run(detail);
        all_ok = all_ok && ok;
        std::printf("[%s] criterion %d: %s -- %s\n", ok ? "PASS" : "FAIL", i, criteria[i - 1].name,
                    detail.c_str());
        std::fflush(stdout);
    }
    return all_ok ? 0 : 1;
}

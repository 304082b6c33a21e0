#include "schwinger/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <queue>

#include "schwinger/dense.hpp"
#include "schwinger/errors.hpp"
#include "schwinger/kernels.hpp"
#include "schwinger/numtheory.hpp"
#include "schwinger/phase_algebra.hpp"
#include "schwinger/representations.hpp"
#include "schwinger/states.hpp"

namespace schwinger {

using json = nlohmann::ordered_json;

std::string_view to_string(CheckStatus status) {
    switch (status) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Skipped: return "skipped";
    }
    return "unknown";
}

json CheckResult::to_json() const {
    json j;
    j["check_id"] = check_id;
    j["M"] = modulus;
    j["parameters"] = parameters;
    j["status"] = std::string(schwinger::to_string(status));
    if (status == CheckStatus::Skipped) j["reason"] = reason;
    if (witness) j["witness"] = *witness;
    if (!notes.empty()) j["notes"] = notes;
    return j;
}

namespace {

constexpr double kConjugacyTolerance = 1e-9;
constexpr double kOperatorTolerance = 1e-12;
constexpr double kGramTolerance = 1e-12;
// Exhaustive O(M) scans (CRT, brute-force roots) run up to this size.
constexpr std::uint64_t kMaxScan = std::uint64_t{1} << 24;

// Everything a check needs about M, computed once per suite run.
struct Context {
    std::uint64_t M;
    Factorization f;
    std::vector<BiFactorization> splits;        // canonical
    std::vector<BiFactorization> orientations;  // canonical plus swapped
    SuiteOptions options;
};

class Recorder {
public:
    Recorder(std::string id, const Context& ctx) {
        result_.check_id = std::move(id);
        result_.modulus = ctx.M;
    }

    bool failed() const { return result_.status == CheckStatus::Fail; }

    // Keeps the first witness; later failures only bump the count.
    void fail(json witness) {
        ++failures_;
        if (failed()) return;
        result_.status = CheckStatus::Fail;
        result_.witness = std::move(witness);
    }

    void expect(bool ok, const std::function<json()>& witness) {
        if (!ok) fail(witness());
    }

    void skip(std::string reason) {
        result_.status = CheckStatus::Skipped;
        result_.reason = std::move(reason);
    }

    void note(std::string text) { result_.notes.push_back(std::move(text)); }
    json& params() { return result_.parameters; }

    CheckResult finish() && {
        if (failures_ > 1) result_.parameters["failure_count"] = failures_;
        return std::move(result_);
    }

private:
    CheckResult result_;
    std::uint64_t failures_ = 0;
};

json split_json(const BiFactorization& bi) { return json::array({bi.m1(), bi.m2()}); }

json label_json(const Label& l) { return json(l); }

std::vector<std::uint64_t> divisors(const Factorization& f) {
    std::vector<std::uint64_t> out{1};
    for (const auto& c : f.constituents()) {
        const std::size_t n = out.size();
        std::uint64_t pk = 1;
        for (unsigned e = 1; e <= c.exponent; ++e) {
            pk *= c.prime;
            for (std::size_t i = 0; i < n; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<LabeledBasis> all_bases(const Context& ctx) {
    std::vector<LabeledBasis> out;
    out.push_back(build_position_basis(ctx.M));
    out.push_back(build_momentum_basis(ctx.M));
    out.push_back(build_complete_basis(ctx.f, BasisKind::CompletePosition));
    out.push_back(build_complete_basis(ctx.f, BasisKind::CompleteMomentum));
    // Swapped orientations are relabelings (see label-bijection).
    for (const auto& bi : ctx.splits) {
        out.push_back(build_kq_basis(bi));
        out.push_back(build_conjugate_kq_basis(bi));
        out.push_back(build_q1q2_basis(bi));
        out.push_back(build_k1k2_basis(bi));
    }
    return out;
}

json basis_json(const LabeledBasis& b) {
    json j;
    j["basis"] = std::string(to_string(b.kind()));
    if (b.split()) j["split"] = split_json(*b.split());
    return j;
}

bool over_materialization_cap(const Context& ctx, Recorder& rec) {
    if (ctx.M <= kMaxMaterializedDimension) return false;
    rec.skip("M exceeds the materialization cap " + std::to_string(kMaxMaterializedDimension));
    return true;
}

bool over_scan_cap(const Context& ctx, Recorder& rec) {
    if (ctx.M <= kMaxScan) return false;
    rec.skip("M exceeds the exhaustive scan cap " + std::to_string(kMaxScan));
    return true;
}

// --- number theory -------------------------------------------------------

CheckResult check_factorization(const Context& ctx) {
    Recorder rec("factorization", ctx);
    const auto& f = ctx.f;
    json rows = json::array();
    std::uint64_t product = 1;
    for (std::size_t j = 0; j < f.size(); ++j) {
        const auto& c = f[j];
        rows.push_back({{"p", c.prime}, {"n", c.exponent}, {"m", c.power}, {"L", c.cofactor}, {"N", c.inverse}});
        product *= c.power;
        std::uint64_t pk = 1;
        for (unsigned e = 0; e < c.exponent; ++e) pk *= c.prime;
        rec.expect(pk == c.power, [&] { return json{{"constituent", j}, {"p^n", pk}, {"m", c.power}}; });
        rec.expect(c.cofactor * c.power == ctx.M, [&] { return json{{"constituent", j}, {"L", c.cofactor}}; });
        rec.expect(mul_mod(c.inverse, c.cofactor, c.power) == 1,
                   [&] { return json{{"constituent", j}, {"N*L mod m", mul_mod(c.inverse, c.cofactor, c.power)}}; });
        if (j > 0) {
            rec.expect(f[j - 1].prime < c.prime, [&] { return json{{"constituent", j}, {"unsorted_prime", c.prime}}; });
            for (std::size_t i = 0; i < j; ++i) {
                rec.expect(gcd(f[i].power, c.power) == 1,
                           [&] { return json{{"m_i", f[i].power}, {"m_j", c.power}}; });
            }
        }
    }
    rec.expect(product == ctx.M, [&] { return json{{"product", product}}; });
    rec.params()["constituents"] = rows;
    if (f.size() == 0) rec.note("M = 1 has no prime constituents");
    return std::move(rec).finish();
}

CheckResult check_bifactorization_count(const Context& ctx) {
    Recorder rec("bifactorization-count", ctx);
    const auto& splits = ctx.splits;
    const std::uint64_t expected = ctx.f.size() == 0 ? 1 : std::uint64_t{1} << (ctx.f.size() - 1);
    rec.params()["N"] = ctx.f.size();
    rec.params()["count"] = splits.size();
    rec.params()["chi"] = chi(ctx.f);
    rec.expect(chi(ctx.f) == expected, [&] { return json{{"chi", chi(ctx.f)}, {"expected", expected}}; });
    rec.expect(splits.size() == expected, [&] { return json{{"count", splits.size()}, {"expected", expected}}; });

    // Independent route: divisors d <= M/d with gcd(d, M/d) = 1.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> by_divisor;
    for (auto d : divisors(ctx.f)) {
        if (d <= ctx.M / d && gcd(d, ctx.M / d) == 1) by_divisor.emplace_back(d, ctx.M / d);
    }
    std::vector<std::pair<std::uint64_t, std::uint64_t>> enumerated;
    for (const auto& bi : splits) enumerated.emplace_back(bi.m1(), bi.m2());
    rec.expect(enumerated == by_divisor, [&] {
        return json{{"enumerated", enumerated.size()}, {"divisor_route", by_divisor.size()}};
    });

    json list = json::array();
    for (const auto& bi : splits) {
        list.push_back(split_json(bi));
        rec.expect(bi.is_canonical(), [&] { return json{{"non_canonical", split_json(bi)}}; });
        for (const auto& c : ctx.f.constituents()) {
            const auto g = gcd(c.power, bi.m1());
            rec.expect(g == 1 || g == c.power, [&] { return json{{"split", split_json(bi)}, {"broken_constituent", c.power}}; });
        }
    }
    rec.params()["splits"] = list;
    return std::move(rec).finish();
}

CheckResult check_relative_primality(const Context& ctx) {
    Recorder rec("relative-primality", ctx);
    if (over_scan_cap(ctx, rec)) return std::move(rec).finish();
    for (const auto& bi : ctx.splits) {
        for (std::uint64_t s = 1; s <= bi.m1(); ++s) {
            for (std::uint64_t t = 1; t <= bi.m2(); ++t) {
                const bool zero = add_mod(mul_mod(s, bi.l1(), ctx.M), mul_mod(t, bi.l2(), ctx.M), ctx.M) == 0;
                const bool trivial = s == bi.m1() && t == bi.m2();
                rec.expect(zero == trivial, [&] { return json{{"split", split_json(bi)}, {"s", s}, {"t", t}, {"vanishes", zero}}; });
            }
        }
    }
    return std::move(rec).finish();
}

CheckResult check_label_bijection(const Context& ctx) {
    Recorder rec("label-bijection", ctx);
    if (over_scan_cap(ctx, rec)) return std::move(rec).finish();
    for (const auto& bi : ctx.orientations) {
        std::vector<bool> hit(ctx.M, false);
        for (std::uint64_t s = 0; s < bi.m1(); ++s) {
            for (std::uint64_t t = 0; t < bi.m2(); ++t) {
                const auto x = add_mod(mul_mod(s, bi.e1(), ctx.M), mul_mod(t, bi.e2(), ctx.M), ctx.M);
                rec.expect(!hit[x], [&] { return json{{"split", split_json(bi)}, {"s", s}, {"t", t}, {"repeated_x", x}}; });
                hit[x] = true;
            }
        }
        const auto one = add_mod(bi.e1(), bi.e2(), ctx.M);
        rec.expect(one == 1 % ctx.M, [&] { return json{{"split", split_json(bi)}, {"x(1,1)", one}}; });
    }
    // Swapping the factors only relabels: kq of (M2, M1) is KQ of (M1, M2)
    // label for label, and q1q2 / k1k2 swap their two slots. The table checks
    // below lean on this and visit one orientation per split.
    if (ctx.M > kMaxMaterializedDimension) {
        rec.note("orientation relabeling not checked above the materialization cap");
        return std::move(rec).finish();
    }
    for (const auto& bi : ctx.splits) {
        if (bi.m1() == bi.m2()) continue;
        const auto sw = bi.swapped();
        const std::pair<LabeledBasis, LabeledBasis> same_labels[] = {
            {build_kq_basis(sw), build_conjugate_kq_basis(bi)},
            {build_conjugate_kq_basis(sw), build_kq_basis(bi)},
        };
        for (const auto& [a, b] : same_labels) {
            for (std::uint64_t i = 0; i < ctx.M; ++i) {
                rec.expect(a.state_at(i) == b.state_at(i), [&] {
                    return json{{"split", split_json(bi)}, {"basis", basis_json(a)}, {"label", label_json(a.label(i))}};
                });
            }
        }
        const std::pair<LabeledBasis, LabeledBasis> swapped_slots[] = {
            {build_q1q2_basis(sw), build_q1q2_basis(bi)},
            {build_k1k2_basis(sw), build_k1k2_basis(bi)},
        };
        for (const auto& [a, b] : swapped_slots) {
            for (std::uint64_t i = 0; i < ctx.M; ++i) {
                const Label l = a.label(i);
                rec.expect(a.state(l) == b.state(Label{l[1], l[0]}), [&] {
                    return json{{"split", split_json(bi)}, {"basis", basis_json(a)}, {"label", label_json(l)}};
                });
            }
        }
    }
    return std::move(rec).finish();
}

CheckResult check_crt_bijection(const Context& ctx) {
    Recorder rec("crt-bijection", ctx);
    if (over_scan_cap(ctx, rec)) return std::move(rec).finish();
    const CrtLabelMap map(ctx.f);
    std::vector<bool> hit(ctx.M, false);
    for (std::uint64_t x = 0; x < ctx.M; ++x) {
        const Label l = map.forward(x);
        const auto back = map.backward(l);
        rec.expect(back == x, [&] { return json{{"x", x}, {"label", label_json(l)}, {"backward", back}}; });
    }
    // Enumerate label tuples directly (mixed radix) and map them backward.
    const auto moduli = map.moduli();
    Label l(moduli.size(), 0);
    for (std::uint64_t i = 0; i < ctx.M; ++i) {
        const auto x = map.backward(l);
        rec.expect(!hit[x], [&] { return json{{"label", label_json(l)}, {"repeated_x", x}}; });
        hit[x] = true;
        rec.expect(map.forward(x) == l, [&] { return json{{"label", label_json(l)}, {"x", x}}; });
        for (std::size_t j = 0; j < l.size() && ++l[j] == moduli[j]; ++j) l[j] = 0;
    }
    const Label ones(moduli.size(), 1);
    const auto x1 = map.backward(ones);
    rec.expect(x1 == 1 % ctx.M, [&] { return json{{"all_ones_maps_to", x1}}; });
    rec.params()["moduli"] = moduli;
    return std::move(rec).finish();
}

CheckResult check_unit_roots(const Context& ctx) {
    Recorder rec("unit-roots", ctx);
    if (over_scan_cap(ctx, rec)) return std::move(rec).finish();
    const auto roots = unit_square_roots(ctx.f);
    std::vector<std::uint64_t> crt_values;
    for (const auto& r : roots) crt_values.push_back(r.value);
    std::vector<std::uint64_t> scanned;
    for (std::uint64_t x = 0; x < ctx.M; ++x) {
        if (mul_mod(x, x, ctx.M) == 1 % ctx.M) scanned.push_back(x);
    }
    rec.expect(crt_values == scanned, [&] { return json{{"crt", crt_values}, {"brute_force", scanned}}; });
    std::vector<std::uint64_t> exotic;
    for (const auto& r : roots) {
        for (std::size_t j = 0; j < ctx.f.size(); ++j) {
            rec.expect(r.value % ctx.f[j].power == r.sign_pattern[j],
                       [&] { return json{{"root", r.value}, {"constituent", ctx.f[j].power}}; });
        }
        const auto neg = sub_mod(0, r.value, ctx.M);
        rec.expect(std::binary_search(crt_values.begin(), crt_values.end(), neg),
                   [&] { return json{{"root", r.value}, {"missing_negation", neg}}; });
        if (!r.is_sign_root(ctx.f)) exotic.push_back(r.value);
    }
    rec.params()["roots"] = crt_values;
    rec.params()["count"] = crt_values.size();
    if (!exotic.empty()) {
        rec.params()["non_sign_roots"] = exotic;
        rec.note("8 divides M: x^2 = 1 has roots that are not +-1 modulo every prime power, so the root count exceeds 2^N");
    }
    return std::move(rec).finish();
}

// The member of {a, M - a} whose residue on the first constituent is +1;
// the smaller one when that does not decide (m_1 = 2).
bool is_pair_representative(const UnitRoot& r, const Factorization& f, std::uint64_t M) {
    const std::uint64_t neg = sub_mod(0, r.value, M);
    if (f.size() == 0) return true;
    const bool plus = r.sign_pattern[0] == 1 % f[0].power;
    const bool neg_plus = neg % f[0].power == 1 % f[0].power;
    if (plus != neg_plus) return plus;
    return r.value <= neg;
}

CheckResult check_root_correspondence(const Context& ctx) {
    Recorder rec("root-correspondence", ctx);
    if (over_scan_cap(ctx, rec)) return std::move(rec).finish();
    const std::uint64_t M = ctx.M;
    const auto& f = ctx.f;
    const auto roots = unit_square_roots(f);

    std::vector<UnitRoot> sign_roots;
    std::vector<std::uint64_t> exotic;
    for (const auto& r : roots) {
        if (r.is_sign_root(f)) {
            sign_roots.push_back(r);
            continue;
        }
        exotic.push_back(r.value);
        bool threw = false;
        try {
            (void)root_to_bifactorization(r, f);
        } catch (const NotSignRoot&) {
            threw = true;
        }
        rec.expect(threw, [&] { return json{{"non_sign_root_accepted", r.value}}; });
    }

    std::map<std::uint64_t, BiFactorization> split_of;
    for (const auto& r : sign_roots) split_of.emplace(r.value, root_to_bifactorization(r, f));

    json table = json::array();
    std::vector<std::pair<std::uint64_t, std::uint64_t>> images;
    for (const auto& r : sign_roots) {
        if (!is_pair_representative(r, f, M)) continue;
        const auto& bi = split_of.at(r.value);
        json signs = json::array();
        for (std::size_t j = 0; j < f.size(); ++j) {
            signs.push_back(r.sign_pattern[j] == 1 % f[j].power ? "+" : "-");
        }
        table.push_back({{"root", r.value}, {"signs", signs}, {"split", split_json(bi)}});
        images.emplace_back(bi.canonical().m1(), bi.canonical().m2());
    }
    rec.params()["representatives"] = table;

    std::vector<std::pair<std::uint64_t, std::uint64_t>> enumerated;
    for (const auto& bi : ctx.splits) enumerated.emplace_back(bi.m1(), bi.m2());

    const bool two_mod_four = M % 4 == 2;
    if (two_mod_four) {
        // +1 and -1 coincide modulo 2, so a and M - a differ in where the
        // factor 2 goes. Individual sign roots biject onto the splits.
        rec.note("M = 2 mod 4: a and M - a give different splits; sign roots (not pairs) biject with the coprime splits");
        std::vector<std::pair<std::uint64_t, std::uint64_t>> all;
        for (const auto& r : sign_roots) {
            const auto c = split_of.at(r.value).canonical();
            all.emplace_back(c.m1(), c.m2());
        }
        std::sort(all.begin(), all.end());
        rec.expect(all == enumerated, [&] { return json{{"root_images", all}, {"splits", enumerated}}; });
    } else {
        for (const auto& r : sign_roots) {
            const auto neg = sub_mod(0, r.value, M);
            const auto& a = split_of.at(r.value);
            const auto& b = split_of.at(neg);
            rec.expect(a.canonical() == b.canonical(),
                       [&] { return json{{"root", r.value}, {"split", split_json(a)}, {"negated_split", split_json(b)}}; });
            rec.expect(a == b.swapped() || M == 1,
                       [&] { return json{{"root", r.value}, {"split", split_json(a)}, {"negated_split", split_json(b)}}; });
        }
        std::sort(images.begin(), images.end());
        rec.expect(images == enumerated, [&] { return json{{"pair_images", images}, {"splits", enumerated}}; });
    }

    if (M % 2 == 1 && M > 1) {
        rec.expect(roots.size() == (std::uint64_t{1} << f.size()) && roots.size() == 2 * chi(f),
                   [&] { return json{{"roots", roots.size()}, {"chi", chi(f)}}; });
        for (const auto& r : roots) {
            const auto& bi = split_of.at(r.value);
            const auto gm = gcd(sub_mod(r.value, 1, M), M);
            const auto gp = gcd(add_mod(r.value, 1, M), M);
            rec.expect(gm == bi.m1() && gp == bi.m2(),
                       [&] { return json{{"root", r.value}, {"split", split_json(bi)}, {"gcds", json::array({gm, gp})}}; });
        }
    }
    if (M % 2 == 0) rec.note("even M: the +-1 correspondence is restricted to sign roots");
    if (!exotic.empty()) {
        rec.params()["non_sign_roots"] = exotic;
        rec.note("non-sign roots are excluded from the root/split correspondence");
    }
    return std::move(rec).finish();
}

CheckResult check_root_products(const Context& ctx) {
    Recorder rec("root-products", ctx);
    if (ctx.M < 2) {
        rec.skip("requires M >= 2");
        return std::move(rec).finish();
    }
    if (over_scan_cap(ctx, rec)) return std::move(rec).finish();
    json rows = json::array();
    for (const auto& p : root_products_report(ctx.M)) {
        rows.push_back({{"a", p.root},
                        {"a-1", json::array({p.cofactor_minus, p.gcd_minus})},
                        {"a+1", json::array({p.cofactor_plus, p.gcd_plus})}});
        rec.expect(p.product_vanishes, [&] { return json{{"root", p.root}}; });
        rec.expect(p.cofactor_minus * p.gcd_minus == p.minus && p.cofactor_plus * p.gcd_plus == p.plus,
                   [&] { return json{{"root", p.root}, {"decomposition", "inconsistent"}}; });
        rec.expect(p.gcd_minus * p.gcd_plus % ctx.M == 0,
                   [&] { return json{{"root", p.root}, {"gcd_product", p.gcd_minus * p.gcd_plus}}; });
    }
    rec.params()["products"] = rows;
    return std::move(rec).finish();
}

// --- operator algebra ----------------------------------------------------

// Minimality by an independent route: A^p = 1 and A^{p/r} != 1 for every
// prime r dividing p.
bool period_is_minimal(const MonomialOperator& op, std::uint64_t p) {
    if (!power(op, static_cast<std::int64_t>(p)).is_identity()) return false;
    const auto f = factorize(p);
    for (const auto& c : f.constituents()) {
        if (power(op, static_cast<std::int64_t>(p / c.prime)).is_identity()) return false;
    }
    return true;
}

CheckResult check_period_minimality(const Context& ctx) {
    Recorder rec("period-minimality", ctx);
    const std::uint64_t M = ctx.M;
    auto expect_period = [&](const std::string& name, const MonomialOperator& op, std::uint64_t want) {
        const auto got = period(op);
        rec.expect(got == want && period_is_minimal(op, want),
                   [&] { return json{{"operator", name}, {"period", got}, {"expected", want}}; });
    };
    expect_period("U = tau(M)", make_tau(M, M), M);
    expect_period("V = T(1)", make_shift(M, 1), M);
    for (auto d : divisors(ctx.f)) expect_period("tau(" + std::to_string(d) + ")", make_tau(M, d), d);
    for (const auto& c : ctx.f.constituents()) {
        expect_period("T(N_j L_j), m_j = " + std::to_string(c.power),
                      make_shift(M, static_cast<std::int64_t>(c.idempotent(M))), c.power);
    }
    for (const auto& bi : ctx.splits) {
        expect_period("T(N1L1) for split " + std::to_string(bi.m1()) + "*" + std::to_string(bi.m2()),
                      make_shift(M, static_cast<std::int64_t>(bi.e1())), bi.m1());
        expect_period("T(N2L2) for split " + std::to_string(bi.m1()) + "*" + std::to_string(bi.m2()),
                      make_shift(M, static_cast<std::int64_t>(bi.e2())), bi.m2());
    }
    return std::move(rec).finish();
}

CheckResult check_commutator_basic(const Context& ctx) {
    Recorder rec("commutator-basic", ctx);
    const std::uint64_t M = ctx.M;
    const auto U = make_tau(M, M);
    const auto V = make_shift(M, 1);
    const auto c = commutation_exponent(U, V);
    const auto c_rev = commutation_exponent(V, U);
    rec.params()["tau(M)T(1)"] = c.exponent();
    rec.expect(c == PhaseExp(M, -1), [&] { return json{{"A", "tau(M)"}, {"B", "T(1)"}, {"exponent", c.exponent()}}; });
    rec.expect(c_rev == PhaseExp(M, 1), [&] { return json{{"A", "T(1)"}, {"B", "tau(M)"}, {"exponent", c_rev.exponent()}}; });
    return std::move(rec).finish();
}

CheckResult check_commutator_split(const Context& ctx) {
    Recorder rec("commutator-split", ctx);
    const std::uint64_t M = ctx.M;
    for (const auto& bi : ctx.orientations) {
        const auto tau1 = make_tau(M, bi.m1());
        const auto tau2 = make_tau(M, bi.m2());
        const auto t1 = make_shift(M, static_cast<std::int64_t>(bi.e1()));
        const auto t2 = make_shift(M, static_cast<std::int64_t>(bi.e2()));
        auto expect = [&](const char* a_name, const MonomialOperator& a, const char* b_name,
                          const MonomialOperator& b, std::int64_t want) {
            const auto c = commutation_exponent(a, b);
            rec.expect(c == PhaseExp(M, want), [&] {
                return json{{"split", split_json(bi)}, {"A", a_name}, {"B", b_name},
                            {"exponent", c.exponent()}, {"expected", PhaseExp(M, want).exponent()}};
            });
        };
        const auto l1 = static_cast<std::int64_t>(bi.l1());
        const auto l2 = static_cast<std::int64_t>(bi.l2());
        expect("T(N1L1)", t1, "tau(M1)", tau1, l1);
        expect("T(N2L2)", t2, "tau(M2)", tau2, l2);
        expect("tau(M1)", tau1, "T(N1L1)", t1, -l1);
        expect("tau(M2)", tau2, "T(N2L2)", t2, -l2);
        expect("tau(M2)", tau2, "T(N1L1)", t1, 0);
        expect("tau(M1)", tau1, "T(N2L2)", t2, 0);
        expect("tau(M1)", tau1, "tau(M2)", tau2, 0);
        expect("T(N1L1)", t1, "T(N2L2)", t2, 0);
    }
    return std::move(rec).finish();
}

CheckResult check_complete_operator_algebra(const Context& ctx) {
    Recorder rec("complete-operator-algebra", ctx);
    const std::uint64_t M = ctx.M;
    const auto& f = ctx.f;
    const auto U = make_tau(M, M);
    const auto V = make_shift(M, 1);
    std::vector<MonomialOperator> Us, Vs;
    for (const auto& c : f.constituents()) {
        Us.push_back(make_tau(M, c.power));
        Vs.push_back(make_shift(M, static_cast<std::int64_t>(c.idempotent(M))));
    }
    for (std::size_t j = 0; j < f.size(); ++j) {
        const auto& c = f[j];
        rec.expect(Us[j] == power(U, static_cast<std::int64_t>(c.cofactor)),
                   [&] { return json{{"j", j}, {"relation", "U_j = tau(M)^{L_j}"}}; });
        rec.expect(Vs[j] == power(V, static_cast<std::int64_t>(c.idempotent(M))),
                   [&] { return json{{"j", j}, {"relation", "V_j = T(1)^{N_j L_j}"}}; });
        rec.expect(period(Us[j]) == c.power && period_is_minimal(Us[j], c.power),
                   [&] { return json{{"j", j}, {"operator", "U_j"}, {"period", period(Us[j])}}; });
        rec.expect(period(Vs[j]) == c.power && period_is_minimal(Vs[j], c.power),
                   [&] { return json{{"j", j}, {"operator", "V_j"}, {"period", period(Vs[j])}}; });
        for (std::size_t i = 0; i < f.size(); ++i) {
            const auto vu = commutation_exponent(Vs[i], Us[j]);
            const std::uint64_t want = i == j ? c.cofactor % M : 0;
            rec.expect(vu.exponent() == want,
                       [&] { return json{{"i", i}, {"j", j}, {"pair", "V_i U_j"}, {"exponent", vu.exponent()}, {"expected", want}}; });
            rec.expect(commutation_exponent(Us[i], Us[j]).exponent() == 0,
                       [&] { return json{{"i", i}, {"j", j}, {"pair", "U_i U_j"}}; });
            rec.expect(commutation_exponent(Vs[i], Vs[j]).exponent() == 0,
                       [&] { return json{{"i", i}, {"j", j}, {"pair", "V_i V_j"}}; });
        }
    }
    return std::move(rec).finish();
}

CheckResult check_dense_operator_algebra(const Context& ctx) {
    Recorder rec("dense-operator-algebra", ctx);
    const std::uint64_t M = ctx.M;
    const std::uint64_t budget = std::min(ctx.options.max_dense, ctx.options.max_dense_operator);
    rec.params()["budget"] = budget;
    rec.params()["tolerance"] = kOperatorTolerance;
    if (M > budget) {
        rec.skip("M exceeds the dense operator budget " + std::to_string(budget));
        return std::move(rec).finish();
    }
    double worst = 0.0;
    auto compare = [&](const std::string& what, const dense::Matrix& a, const dense::Matrix& b) {
        const double d = dense::max_abs_diff(a, b);
        worst = std::max(worst, d);
        rec.expect(d <= kOperatorTolerance, [&] { return json{{"relation", what}, {"deviation", d}}; });
    };

    std::vector<std::pair<std::string, MonomialOperator>> gens;
    for (auto d : divisors(ctx.f)) {
        const auto op = make_tau(M, d);
        compare("tau(" + std::to_string(d) + ") vs definition", dense::to_matrix(op), dense::tau(M, d));
        gens.emplace_back("tau(" + std::to_string(d) + ")", op);
    }
    std::vector<std::uint64_t> shifts{1};
    for (const auto& c : ctx.f.constituents()) shifts.push_back(c.idempotent(M));
    for (const auto& bi : ctx.splits) {
        shifts.push_back(bi.e1());
        shifts.push_back(bi.e2());
    }
    for (auto s : shifts) {
        const auto op = make_shift(M, static_cast<std::int64_t>(s));
        compare("T(" + std::to_string(s) + ") vs definition", dense::to_matrix(op), dense::shift(M, static_cast<std::int64_t>(s)));
        gens.emplace_back("T(" + std::to_string(s) + ")", op);
    }
    for (const auto& [an, a] : gens) {
        for (const auto& [bn, b] : gens) {
            const auto da = dense::to_matrix(a);
            const auto db = dense::to_matrix(b);
            compare(an + "*" + bn, dense::to_matrix(compose(a, b)), dense::multiply(da, db));
            // A B = omega^c B A, with c from exact arithmetic when it exists.
            try {
                const auto c = commutation_exponent(a, b);
                auto rhs = dense::multiply(db, da);
                const auto w = c.value();
                dense::Matrix scaled(M);
                for (std::size_t i = 0; i < M; ++i)
                    for (std::size_t j = 0; j < M; ++j) scaled(i, j) = rhs(i, j) * w;
                compare("commutator " + an + "," + bn, dense::multiply(da, db), scaled);
            } catch (const NotCentral&) {
            }
        }
    }
    const auto V = make_shift(M, 1);
    const auto U = make_tau(M, M);
    compare("V^M", dense::to_matrix(power(V, static_cast<std::int64_t>(M))), dense::Matrix::identity(M));
    compare("U^M", dense::to_matrix(power(U, static_cast<std::int64_t>(M))), dense::Matrix::identity(M));
    compare("V^-1", dense::to_matrix(power(V, -1)), dense::shift(M, -1));
    rec.params()["max_deviation"] = worst;
    return std::move(rec).finish();
}

// --- states and bases ----------------------------------------------------

CheckResult check_conjugacy_position_momentum(const Context& ctx) {
    Recorder rec("conjugacy-position-momentum", ctx);
    if (over_materialization_cap(ctx, rec)) return std::move(rec).finish();
    const std::uint64_t M = ctx.M;
    const auto table = kernels::parallel::overlap_table(build_position_basis(M), build_momentum_basis(M));
    for (std::uint64_t x = 0; x < M; ++x) {
        for (std::uint64_t k = 0; k < M; ++k) {
            const auto& o = table.at(x, k);
            const bool ok = o.exact && o.exact->coefficient == 1 && o.denominator == M &&
                            o.exact->phase.exponent() == mul_mod(k, x, M);
            rec.expect(ok, [&] { return json{{"x", x}, {"k", k}, {"magnitude", o.magnitude()}}; });
        }
    }
    return std::move(rec).finish();
}

CheckResult check_eigen_relations(const Context& ctx) {
    Recorder rec("eigen-relations", ctx);
    if (over_materialization_cap(ctx, rec)) return std::move(rec).finish();
    const std::uint64_t M = ctx.M;
    std::size_t checked = 0;
    for (const auto& basis : all_bases(ctx)) {
        const auto relations = basis.eigen_relations();
        for (std::uint64_t i = 0; i < M; ++i) {
            const Label l = basis.label(i);
            const auto s = basis.state(l);
            for (const auto& rel : relations) {
                const auto got = is_eigenstate(rel.op, s);
                const auto want = mul_mod(l[rel.slot], rel.step, M);
                ++checked;
                rec.expect(got && got->exponent() == want, [&] {
                    json w = basis_json(basis);
                    w["label"] = label_json(l);
                    w["operator"] = rel.name;
                    w["expected"] = want;
                    w["eigen_exponent"] = got ? json(got->exponent()) : json(nullptr);
                    return w;
                });
            }
        }
    }
    rec.params()["relations_checked"] = checked;
    return std::move(rec).finish();
}

Label shifted(const LabeledBasis& b, const Label& l, std::size_t slot, int delta) {
    Label out = l;
    const auto m = b.scheme()[slot];
    out[slot] = delta > 0 ? (l[slot] + 1) % m : (l[slot] + m - 1) % m;
    return out;
}

CheckResult check_ladder_relations(const Context& ctx) {
    Recorder rec("ladder-relations", ctx);
    if (over_materialization_cap(ctx, rec)) return std::move(rec).finish();
    for (const auto& basis : all_bases(ctx)) {
        const auto ladders = basis.ladder_relations();
        for (std::uint64_t i = 0; i < ctx.M; ++i) {
            const Label l = basis.label(i);
            const auto s = basis.state(l);
            for (const auto& lad : ladders) {
                const Label target = shifted(basis, l, lad.slot, lad.delta);
                const auto image = apply(lad.op, s);
                rec.expect(image == basis.state(target), [&] {
                    json w = basis_json(basis);
                    w["label"] = label_json(l);
                    w["operator"] = lad.name;
                    w["expected_label"] = label_json(target);
                    w["equal_up_to_phase"] = equal_up_to_global_phase(image, basis.state(target));
                    return w;
                });
            }
        }
    }
    return std::move(rec).finish();
}

using StateKey = std::vector<std::pair<std::uint64_t, std::uint64_t>>;

StateKey key_of(const FlatPhaseState& s) {
    StateKey k;
    for (const auto& e : s.entries()) k.emplace_back(e.position, e.exponent);
    return k;
}

CheckResult check_generation(const Context& ctx) {
    Recorder rec("generation", ctx);
    if (over_materialization_cap(ctx, rec)) return std::move(rec).finish();
    for (const auto& basis : all_bases(ctx)) {
        // Exact lookup of every basis state (phases included).
        std::map<StateKey, std::uint64_t> index_of;
        for (std::uint64_t i = 0; i < ctx.M; ++i) index_of.emplace(key_of(basis.state_at(i)), i);
        const auto ladders = basis.ladder_relations();

        std::vector<bool> reached(ctx.M, false);
        std::queue<FlatPhaseState> frontier;
        frontier.push(basis.state_at(0));
        reached[0] = true;
        std::size_t count = 1;
        while (!frontier.empty() && !rec.failed()) {
            const auto s = frontier.front();
            frontier.pop();
            for (const auto& lad : ladders) {
                auto next = apply(lad.op, s);
                const auto it = index_of.find(key_of(next));
                if (it == index_of.end()) {
                    rec.fail([&] {
                        json w = basis_json(basis);
                        w["operator"] = lad.name;
                        w["residual_phase_or_unknown_state"] = true;
                        return w;
                    }());
                    break;
                }
                if (!reached[it->second]) {
                    reached[it->second] = true;
                    ++count;
                    frontier.push(std::move(next));
                }
            }
        }
        rec.expect(count == ctx.M, [&] {
            json w = basis_json(basis);
            w["generated"] = count;
            return w;
        });
    }
    return std::move(rec).finish();
}

CheckResult check_orthonormality(const Context& ctx) {
    Recorder rec("orthonormality", ctx);
    const std::uint64_t budget = std::min(ctx.options.max_gram, ctx.options.max_dense);
    rec.params()["budget"] = budget;
    rec.params()["tolerance"] = kGramTolerance;
    if (ctx.M > budget) {
        rec.skip("M exceeds the Gram matrix budget " + std::to_string(budget));
        return std::move(rec).finish();
    }
    double worst = 0.0;
    for (const auto& basis : all_bases(ctx)) {
        const auto table = kernels::parallel::overlap_table(basis, basis);
        for (std::uint64_t i = 0; i < ctx.M; ++i) {
            for (std::uint64_t j = 0; j < ctx.M; ++j) {
                const auto& o = table.at(i, j);
                const bool ok = i == j ? (o.exact && o.exact->phase.exponent() == 0 && o.magnitude_squared_equals(1, 1))
                                       : o.exact_zero;
                rec.expect(ok, [&] {
                    json w = basis_json(basis);
                    w["bra"] = label_json(basis.label(i));
                    w["ket"] = label_json(basis.label(j));
                    w["value"] = json::array({o.value.real(), o.value.imag()});
                    return w;
                });
            }
        }
        const double d = kernels::gram_deviation(kernels::parallel::dense_overlap_table(basis, basis));
        worst = std::max(worst, d);
        rec.expect(d <= kGramTolerance, [&] {
            json w = basis_json(basis);
            w["gram_deviation"] = d;
            return w;
        });
    }
    rec.params()["max_gram_deviation"] = worst;
    return std::move(rec).finish();
}

// Exact check of a whole overlap table against a closed-form exponent with
// magnitude 1/sqrt(M).
void expect_closed_form(Recorder& rec, const LabeledBasis& bra, const LabeledBasis& ket,
                        const std::function<std::uint64_t(const Label&, const Label&)>& exponent) {
    const std::uint64_t M = bra.dimension();
    const auto table = kernels::parallel::overlap_table(bra, ket);
    for (std::uint64_t i = 0; i < M; ++i) {
        const Label a = bra.label(i);
        for (std::uint64_t j = 0; j < M; ++j) {
            const Label b = ket.label(j);
            const auto& o = table.at(i, j);
            const auto want = exponent(a, b);
            const bool ok = o.exact && o.exact->coefficient == 1 && o.denominator == M &&
                            o.exact->phase.exponent() == want;
            rec.expect(ok, [&] {
                json w;
                w["bra"] = basis_json(bra);
                w["ket"] = basis_json(ket);
                w["bra_label"] = label_json(a);
                w["ket_label"] = label_json(b);
                w["expected_exponent"] = want;
                w["exponent"] = o.exact ? json(o.exact->phase.exponent()) : json(nullptr);
                w["magnitude"] = o.magnitude();
                return w;
            });
        }
    }
}

CheckResult check_overlap_kq(const Context& ctx) {
    Recorder rec("overlap-kq", ctx);
    if (over_materialization_cap(ctx, rec)) return std::move(rec).finish();
    rec.params()["formula"] = "<k,q|K,Q> = omega_M^(K q M1 - k Q M2) / sqrt(M)";
    for (const auto& bi : ctx.splits) {
        expect_closed_form(rec, build_kq_basis(bi), build_conjugate_kq_basis(bi),
                           [&](const Label& a, const Label& b) { return kq_overlap_exponent(bi, a[0], a[1], b[0], b[1]); });
    }
    return std::move(rec).finish();
}

CheckResult check_overlap_q1q2(const Context& ctx) {
    Recorder rec("overlap-q1q2", ctx);
    if (over_materialization_cap(ctx, rec)) return std::move(rec).finish();
    rec.params()["formula"] = "<q1,q2|k1,k2> = omega_M^(q1 k1 M2 + q2 k2 M1) / sqrt(M)";
    for (const auto& bi : ctx.splits) {
        expect_closed_form(rec, build_q1q2_basis(bi), build_k1k2_basis(bi),
                           [&](const Label& a, const Label& b) { return q1q2_overlap_exponent(bi, a[0], a[1], b[0], b[1]); });
    }
    return std::move(rec).finish();
}

CheckResult check_overlap_complete(const Context& ctx) {
    Recorder rec("overlap-complete", ctx);
    if (over_materialization_cap(ctx, rec)) return std::move(rec).finish();
    rec.params()["formula"] = "<q_1..q_N|k_1..k_N> = omega_M^(sum_j k_j q_j L_j) / sqrt(M)";
    expect_closed_form(rec, build_complete_basis(ctx.f, BasisKind::CompletePosition),
                       build_complete_basis(ctx.f, BasisKind::CompleteMomentum),
                       [&](const Label& q, const Label& k) { return complete_overlap_exponent(ctx.f, q, k); });
    return std::move(rec).finish();
}

CheckResult check_consistency_relations(const Context& ctx) {
    Recorder rec("consistency-relations", ctx);
    if (over_materialization_cap(ctx, rec)) return std::move(rec).finish();
    const std::uint64_t M = ctx.M;
    for (const auto& bi : ctx.splits) {
        const auto kq = build_kq_basis(bi);
        const auto KQ = build_conjugate_kq_basis(bi);
        const auto table = kernels::parallel::overlap_table(kq, KQ);
        const auto m1 = bi.m1(), m2 = bi.m2();
        // Every entry is a single exact term; compare exponents. Row-major
        // labels: kq index k m2 + q, KQ index K m1 + Q.
        auto exponent = [&](std::uint64_t k, std::uint64_t q, std::uint64_t K, std::uint64_t Q) -> std::optional<std::uint64_t> {
            const auto& o = table.at(k * m2 + q, K * m1 + Q);
            if (!o.exact) return std::nullopt;
            return o.exact->phase.exponent();
        };
        for (std::uint64_t k = 0; k < m1; ++k)
            for (std::uint64_t q = 0; q < m2; ++q)
                for (std::uint64_t K = 0; K < m2; ++K)
                    for (std::uint64_t Q = 0; Q < m1; ++Q) {
                        const auto base = exponent(k, q, K, Q);
                        auto check = [&](int which, std::uint64_t shift, std::optional<std::uint64_t> other) {
                            const bool ok = base && other && add_mod(*base, shift, M) == *other;
                            rec.expect(ok, [&] {
                                return json{{"split", split_json(bi)}, {"relation", which},
                                            {"k", k}, {"q", q}, {"K", K}, {"Q", Q}};
                            });
                        };
                        check(1, mul_mod(q, m1, M), exponent(k, q, (K + 1) % m2, Q));
                        check(2, mul_mod(Q, m2, M), exponent((k + m1 - 1) % m1, q, K, Q));
                        check(3, mul_mod(k, m2, M), exponent(k, q, K, (Q + m1 - 1) % m1));
                        check(4, mul_mod(K, m1, M), exponent(k, (q + 1) % m2, K, Q));
                    }
    }
    return std::move(rec).finish();
}

CheckResult check_dense_conjugacy(const Context& ctx) {
    Recorder rec("dense-conjugacy", ctx);
    const std::uint64_t budget = std::min(ctx.options.max_dense, kMaxMaterializedDimension);
    rec.params()["budget"] = budget;
    rec.params()["tolerance"] = kConjugacyTolerance;
    if (ctx.M > budget) {
        rec.skip("M exceeds the dense budget " + std::to_string(budget));
        return std::move(rec).finish();
    }
    const std::uint64_t M = ctx.M;
    const double target = 1.0 / std::sqrt(static_cast<double>(M));
    std::vector<std::pair<LabeledBasis, LabeledBasis>> pairs;
    pairs.emplace_back(build_position_basis(M), build_momentum_basis(M));
    pairs.emplace_back(build_complete_basis(ctx.f, BasisKind::CompletePosition),
                       build_complete_basis(ctx.f, BasisKind::CompleteMomentum));
    for (const auto& bi : ctx.splits) {
        pairs.emplace_back(build_kq_basis(bi), build_conjugate_kq_basis(bi));
        pairs.emplace_back(build_q1q2_basis(bi), build_k1k2_basis(bi));
    }
    double worst_mag = 0.0, worst_value = 0.0;
    for (const auto& [bra, ket] : pairs) {
        const auto dense_table = kernels::parallel::dense_overlap_table(bra, ket);
        const auto exact_table = kernels::parallel::overlap_table(bra, ket);
        for (std::uint64_t i = 0; i < M; ++i) {
            for (std::uint64_t j = 0; j < M; ++j) {
                const double dm = std::abs(std::abs(dense_table(i, j)) - target);
                const double dv = std::abs(dense_table(i, j) - exact_table.at(i, j).value);
                worst_mag = std::max(worst_mag, dm);
                worst_value = std::max(worst_value, dv);
                rec.expect(dm <= kConjugacyTolerance && dv <= kConjugacyTolerance, [&] {
                    json w;
                    w["bra"] = basis_json(bra);
                    w["ket"] = basis_json(ket);
                    w["bra_label"] = label_json(bra.label(i));
                    w["ket_label"] = label_json(ket.label(j));
                    w["magnitude_deviation"] = dm;
                    w["exact_vs_dense"] = dv;
                    return w;
                });
            }
        }
    }
    rec.params()["max_magnitude_deviation"] = worst_mag;
    rec.params()["max_exact_vs_dense"] = worst_value;
    return std::move(rec).finish();
}

CheckResult check_localization(const Context& ctx) {
    Recorder rec("localization", ctx);
    if (over_materialization_cap(ctx, rec)) return std::move(rec).finish();
    json rows = json::array();
    for (const auto& bi : ctx.orientations) {
        const auto report = localization_demo(bi);
        rows.push_back({{"split", split_json(bi)}, {"psi_support", report.psi.support_size()}});
        rec.expect(report.delta_structure_exact, [&] { return json{{"split", split_json(bi)}}; });
    }
    rec.params()["cases"] = rows;
    return std::move(rec).finish();
}

using CheckFn = CheckResult (*)(const Context&);

const std::vector<std::pair<std::string, CheckFn>>& registry() {
    static const std::vector<std::pair<std::string, CheckFn>> checks = [] {
        std::vector<std::pair<std::string, CheckFn>> v{
            {"bifactorization-count", check_bifactorization_count},
            {"commutator-basic", check_commutator_basic},
            {"commutator-split", check_commutator_split},
            {"complete-operator-algebra", check_complete_operator_algebra},
            {"conjugacy-position-momentum", check_conjugacy_position_momentum},
            {"consistency-relations", check_consistency_relations},
            {"crt-bijection", check_crt_bijection},
            {"dense-conjugacy", check_dense_conjugacy},
            {"dense-operator-algebra", check_dense_operator_algebra},
            {"eigen-relations", check_eigen_relations},
            {"factorization", check_factorization},
            {"generation", check_generation},
            {"label-bijection", check_label_bijection},
            {"ladder-relations", check_ladder_relations},
            {"localization", check_localization},
            {"orthonormality", check_orthonormality},
            {"overlap-complete", check_overlap_complete},
            {"overlap-kq", check_overlap_kq},
            {"overlap-q1q2", check_overlap_q1q2},
            {"period-minimality", check_period_minimality},
            {"relative-primality", check_relative_primality},
            {"root-correspondence", check_root_correspondence},
            {"root-products", check_root_products},
            {"unit-roots", check_unit_roots},
        };
        std::sort(v.begin(), v.end());
        return v;
    }();
    return checks;
}

}  // namespace

const std::vector<std::string>& check_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto& [id, fn] : registry()) v.push_back(id);
        return v;
    }();
    return ids;
}

std::vector<CheckResult> run_suite(std::uint64_t M, const std::set<std::string>& selection,
                                   const SuiteOptions& options) {
    if (M == 0) throw InvalidArgument("run_suite: M must be positive");
    if (M > kMaxOperatorDimension) throw InvalidArgument("run_suite: M exceeds 2^31 - 1");
    for (const auto& id : selection) {
        if (std::find(check_ids().begin(), check_ids().end(), id) == check_ids().end()) {
            throw InvalidArgument("unknown check id: " + id);
        }
    }

    Context ctx{M, factorize(M), {}, {}, options};
    ctx.splits = enumerate_bifactorizations(ctx.f);
    for (const auto& bi : ctx.splits) {
        ctx.orientations.push_back(bi);
        if (bi.m1() != bi.m2()) ctx.orientations.push_back(bi.swapped());
    }

    std::vector<std::pair<std::string, CheckFn>> selected;
    for (const auto& entry : registry()) {
        if (selection.empty() || selection.count(entry.first)) selected.push_back(entry);
    }

    std::vector<std::optional<CheckResult>> slots(selected.size());
    const auto n = static_cast<std::int64_t>(selected.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < n; ++i) {
        const auto& [id, fn] = selected[i];
        try {
            slots[i] = fn(ctx);
        } catch (const std::exception& e) {
            CheckResult r;
            r.check_id = id;
            r.modulus = M;
            r.status = CheckStatus::Fail;
            r.witness = json{{"exception", e.what()}};
            slots[i] = std::move(r);
        }
    }

    std::vector<CheckResult> out;
    out.reserve(slots.size());
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

SuiteSummary summarize(const std::vector<CheckResult>& results) {
    SuiteSummary s;
    for (const auto& r : results) {
        switch (r.status) {
            case CheckStatus::Pass: ++s.pass; break;
            case CheckStatus::Fail: ++s.fail; break;
            case CheckStatus::Skipped: ++s.skipped; break;
        }
    }
    return s;
}

json report_to_json(std::uint64_t M, const std::vector<CheckResult>& results) {
    json j;
    j["M"] = M;
    auto& arr = j["results"] = json::array();
    for (const auto& r : results) arr.push_back(r.to_json());
    const auto s = summarize(results);
    j["summary"] = {{"pass", s.pass}, {"fail", s.fail}, {"skipped", s.skipped}};
    return j;
}

std::vector<RootProduct> root_products_report(std::uint64_t M) {
    if (M < 2) throw InvalidArgument("root_products_report: M must be at least 2");
    const auto f = factorize(M);
    std::vector<RootProduct> out;
    for (const auto& r : unit_square_roots(f)) {
        if (!r.is_sign_root(f)) continue;
        RootProduct p;
        p.root = r.value;
        p.minus = r.value - 1 + (r.value == 0 ? M : 0);
        p.plus = r.value + 1;
        p.gcd_minus = gcd(p.minus, M);
        p.gcd_plus = gcd(p.plus, M);
        p.cofactor_minus = p.minus / p.gcd_minus;
        p.cofactor_plus = p.plus / p.gcd_plus;
        p.product_vanishes = mul_mod(p.minus % M, p.plus % M, M) == 0;
        out.push_back(p);
    }
    return out;
}

}  // namespace schwinger

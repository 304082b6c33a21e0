#include "schwinger/representations.hpp"

#include <json.hpp>

#include "schwinger/errors.hpp"

namespace schwinger {

CrtLabelMap::CrtLabelMap(std::vector<std::uint64_t> moduli) : moduli_(std::move(moduli)) {
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        if (moduli_[i] == 0) throw InvalidArgument("CrtLabelMap: moduli must be positive");
        for (std::size_t j = 0; j < i; ++j) {
            if (gcd(moduli_[i], moduli_[j]) != 1) {
                throw NotCoprime("CrtLabelMap: moduli " + std::to_string(moduli_[j]) + " and " +
                                 std::to_string(moduli_[i]) + " are not coprime");
            }
        }
        if (modulus_ > kMaxModulus / moduli_[i]) throw InvalidArgument("CrtLabelMap: modulus overflow");
        modulus_ *= moduli_[i];
    }
    idempotents_.reserve(moduli_.size());
    for (auto m : moduli_) {
        const std::uint64_t L = modulus_ / m;
        idempotents_.push_back(mul_mod(mod_inverse(L, m), L, modulus_));
    }
}

CrtLabelMap::CrtLabelMap(const Factorization& f) : CrtLabelMap(f.moduli()) {}

Label CrtLabelMap::forward(std::uint64_t x) const {
    Label out;
    out.reserve(moduli_.size());
    for (auto m : moduli_) out.push_back(x % m);
    return out;
}

std::uint64_t CrtLabelMap::backward(const Label& label) const {
    if (label.size() != moduli_.size()) throw InvalidArgument("CrtLabelMap: label length mismatch");
    std::uint64_t x = 0;
    for (std::size_t j = 0; j < label.size(); ++j) {
        x = add_mod(x, mul_mod(label[j] % moduli_[j], idempotents_[j], modulus_), modulus_);
    }
    return modulus_ == 1 ? 0 : x;
}

std::string_view to_string(BasisKind kind) {
    switch (kind) {
        case BasisKind::Position: return "position";
        case BasisKind::Momentum: return "momentum";
        case BasisKind::KQ: return "kq";
        case BasisKind::ConjugateKQ: return "KQ";
        case BasisKind::Q1Q2: return "q1q2";
        case BasisKind::K1K2: return "k1k2";
        case BasisKind::CompletePosition: return "complete";
        case BasisKind::CompleteMomentum: return "complete-momentum";
    }
    return "unknown";
}

std::optional<BasisKind> parse_basis_kind(std::string_view name) {
    for (auto kind : {BasisKind::Position, BasisKind::Momentum, BasisKind::KQ, BasisKind::ConjugateKQ,
                      BasisKind::Q1Q2, BasisKind::K1K2, BasisKind::CompletePosition,
                      BasisKind::CompleteMomentum}) {
        if (to_string(kind) == name) return kind;
    }
    return std::nullopt;
}

bool needs_split(BasisKind kind) {
    switch (kind) {
        case BasisKind::KQ:
        case BasisKind::ConjugateKQ:
        case BasisKind::Q1Q2:
        case BasisKind::K1K2: return true;
        default: return false;
    }
}

LabeledBasis::LabeledBasis(BasisKind kind, std::uint64_t M, std::vector<std::uint64_t> scheme)
    : kind_(kind), modulus_(M), scheme_(std::move(scheme)) {
    if (M == 0 || M > kMaxOperatorDimension) throw InvalidArgument("basis dimension out of range");
}

std::vector<std::string> LabeledBasis::slot_names() const {
    switch (kind_) {
        case BasisKind::Position: return {"x"};
        case BasisKind::Momentum: return {"k"};
        case BasisKind::KQ: return {"k", "q"};
        case BasisKind::ConjugateKQ: return {"K", "Q"};
        case BasisKind::Q1Q2: return {"q1", "q2"};
        case BasisKind::K1K2: return {"k1", "k2"};
        case BasisKind::CompletePosition:
        case BasisKind::CompleteMomentum: {
            const char* stem = kind_ == BasisKind::CompletePosition ? "q" : "k";
            std::vector<std::string> names;
            for (std::size_t j = 0; j < scheme_.size(); ++j) names.push_back(stem + std::to_string(j + 1));
            return names;
        }
    }
    return {};
}

void LabeledBasis::check_label(const Label& label) const {
    if (label.size() != scheme_.size()) {
        throw InvalidArgument("label has " + std::to_string(label.size()) + " entries, basis expects " +
                              std::to_string(scheme_.size()));
    }
    for (std::size_t j = 0; j < label.size(); ++j) {
        if (label[j] >= scheme_[j]) {
            throw InvalidArgument("label entry " + std::to_string(label[j]) + " outside [0, " +
                                  std::to_string(scheme_[j]) + ")");
        }
    }
}

Label LabeledBasis::label(std::uint64_t index) const {
    if (index >= modulus_) throw InvalidArgument("basis index out of range");
    Label out(scheme_.size());
    for (std::size_t j = scheme_.size(); j-- > 0;) {
        out[j] = index % scheme_[j];
        index /= scheme_[j];
    }
    return out;
}

std::uint64_t LabeledBasis::index(const Label& label) const {
    check_label(label);
    std::uint64_t idx = 0;
    for (std::size_t j = 0; j < label.size(); ++j) idx = idx * scheme_[j] + label[j];
    return idx;
}

FlatPhaseState LabeledBasis::state(const Label& label) const {
    check_label(label);
    const std::uint64_t M = modulus_;
    switch (kind_) {
        case BasisKind::Position: return position_state(M, label[0]);
        case BasisKind::Momentum: return momentum_state(M, label[0]);
        case BasisKind::KQ:
        case BasisKind::ConjugateKQ: {
            // kq sums over the M1 positions q e2 + s e1 with weight
            // omega_{M1}^{k s}; KQ is the same with the roles of the two
            // factors exchanged.
            const bool conj = kind_ == BasisKind::ConjugateKQ;
            const auto& bi = *split_;
            const std::uint64_t range = conj ? bi.m2() : bi.m1();
            const std::uint64_t step_pos = conj ? bi.e2() : bi.e1();
            const std::uint64_t base = mul_mod(label[1], conj ? bi.e1() : bi.e2(), M);
            const std::uint64_t weight = mul_mod(label[0], M / range, M);
            std::vector<FlatPhaseState::Entry> entries;
            entries.reserve(range);
            for (std::uint64_t s = 0; s < range; ++s) {
                entries.push_back({add_mod(base, mul_mod(s, step_pos, M), M), mul_mod(weight, s, M)});
            }
            return FlatPhaseState(M, std::move(entries));
        }
        case BasisKind::Q1Q2:
        case BasisKind::CompletePosition: return position_state(M, crt_->backward(label));
        case BasisKind::K1K2:
        case BasisKind::CompleteMomentum: {
            std::uint64_t k = 0;
            for (std::size_t j = 0; j < label.size(); ++j) k = add_mod(k, mul_mod(label[j], cofactors_[j], M), M);
            return momentum_state(M, M == 1 ? 0 : k);
        }
    }
    throw Error("unknown basis kind");
}

std::vector<EigenRelation> LabeledBasis::eigen_relations() const {
    const std::uint64_t M = modulus_;
    std::vector<EigenRelation> out;
    switch (kind_) {
        case BasisKind::Position: out.push_back({"tau(M)", make_tau(M, M), 0, 1}); break;
        case BasisKind::Momentum: out.push_back({"T(1)", make_shift(M, 1), 0, 1}); break;
        case BasisKind::KQ: {
            const auto& bi = *split_;
            out.push_back({"T(N1L1)", make_shift(M, static_cast<std::int64_t>(bi.e1())), 0, bi.l1()});
            out.push_back({"tau(M2)", make_tau(M, bi.m2()), 1, bi.l2()});
            break;
        }
        case BasisKind::ConjugateKQ: {
            const auto& bi = *split_;
            out.push_back({"T(N2L2)", make_shift(M, static_cast<std::int64_t>(bi.e2())), 0, bi.l2()});
            out.push_back({"tau(M1)", make_tau(M, bi.m1()), 1, bi.l1()});
            break;
        }
        case BasisKind::Q1Q2: {
            const auto& bi = *split_;
            out.push_back({"tau(M1)", make_tau(M, bi.m1()), 0, bi.l1()});
            out.push_back({"tau(M2)", make_tau(M, bi.m2()), 1, bi.l2()});
            break;
        }
        case BasisKind::K1K2: {
            const auto& bi = *split_;
            out.push_back({"T(N1L1)", make_shift(M, static_cast<std::int64_t>(bi.e1())), 0, bi.l1()});
            out.push_back({"T(N2L2)", make_shift(M, static_cast<std::int64_t>(bi.e2())), 1, bi.l2()});
            break;
        }
        case BasisKind::CompletePosition:
            for (std::size_t j = 0; j < scheme_.size(); ++j) {
                out.push_back({"U" + std::to_string(j + 1), make_tau(M, scheme_[j]), j, cofactors_[j]});
            }
            break;
        case BasisKind::CompleteMomentum:
            for (std::size_t j = 0; j < scheme_.size(); ++j) {
                out.push_back({"V" + std::to_string(j + 1),
                               make_shift(M, static_cast<std::int64_t>(crt_->idempotents()[j])), j, cofactors_[j]});
            }
            break;
    }
    return out;
}

std::vector<LadderRelation> LabeledBasis::ladder_relations() const {
    const std::uint64_t M = modulus_;
    auto shift = [M](std::uint64_t s) { return make_shift(M, static_cast<std::int64_t>(s)); };
    std::vector<LadderRelation> out;
    switch (kind_) {
        case BasisKind::Position: out.push_back({"T(1)", make_shift(M, 1), 0, -1}); break;
        case BasisKind::Momentum: out.push_back({"tau(M)", make_tau(M, M), 0, +1}); break;
        case BasisKind::KQ:
            out.push_back({"tau(M1)", make_tau(M, split_->m1()), 0, +1});
            out.push_back({"T(N2L2)", shift(split_->e2()), 1, -1});
            break;
        case BasisKind::ConjugateKQ:
            out.push_back({"tau(M2)", make_tau(M, split_->m2()), 0, +1});
            out.push_back({"T(N1L1)", shift(split_->e1()), 1, -1});
            break;
        case BasisKind::Q1Q2:
            out.push_back({"T(N1L1)", shift(split_->e1()), 0, -1});
            out.push_back({"T(N2L2)", shift(split_->e2()), 1, -1});
            break;
        case BasisKind::K1K2:
            out.push_back({"tau(M1)", make_tau(M, split_->m1()), 0, +1});
            out.push_back({"tau(M2)", make_tau(M, split_->m2()), 1, +1});
            break;
        case BasisKind::CompletePosition:
            for (std::size_t j = 0; j < scheme_.size(); ++j) {
                out.push_back({"V" + std::to_string(j + 1), shift(crt_->idempotents()[j]), j, -1});
            }
            break;
        case BasisKind::CompleteMomentum:
            for (std::size_t j = 0; j < scheme_.size(); ++j) {
                out.push_back({"U" + std::to_string(j + 1), make_tau(M, scheme_[j]), j, +1});
            }
            break;
    }
    return out;
}

LabeledBasis build_position_basis(std::uint64_t M) { return LabeledBasis(BasisKind::Position, M, {M}); }

LabeledBasis build_momentum_basis(std::uint64_t M) { return LabeledBasis(BasisKind::Momentum, M, {M}); }

LabeledBasis build_kq_basis(const BiFactorization& bi) {
    LabeledBasis b(BasisKind::KQ, bi.modulus(), {bi.m1(), bi.m2()});
    b.split_ = bi;
    return b;
}

LabeledBasis build_conjugate_kq_basis(const BiFactorization& bi) {
    LabeledBasis b(BasisKind::ConjugateKQ, bi.modulus(), {bi.m2(), bi.m1()});
    b.split_ = bi;
    return b;
}

LabeledBasis build_q1q2_basis(const BiFactorization& bi) {
    LabeledBasis b(BasisKind::Q1Q2, bi.modulus(), {bi.m1(), bi.m2()});
    b.split_ = bi;
    b.crt_ = CrtLabelMap({bi.m1(), bi.m2()});
    return b;
}

LabeledBasis build_k1k2_basis(const BiFactorization& bi) {
    LabeledBasis b(BasisKind::K1K2, bi.modulus(), {bi.m1(), bi.m2()});
    b.split_ = bi;
    b.cofactors_ = {bi.l1(), bi.l2()};
    return b;
}

LabeledBasis build_complete_basis(const Factorization& f, BasisKind kind) {
    if (kind != BasisKind::CompletePosition && kind != BasisKind::CompleteMomentum) {
        throw InvalidArgument("build_complete_basis: kind must be complete or complete-momentum");
    }
    LabeledBasis b(kind, f.modulus(), f.moduli());
    b.crt_ = CrtLabelMap(f);
    for (const auto& c : f.constituents()) b.cofactors_.push_back(c.cofactor);
    return b;
}

LabeledBasis build_basis(BasisKind kind, std::uint64_t M, const std::optional<BiFactorization>& split) {
    if (needs_split(kind)) {
        if (!split) throw InvalidArgument(std::string(to_string(kind)) + " basis requires a split M1,M2");
        if (split->modulus() != M) {
            throw InvalidArgument("split " + std::to_string(split->m1()) + "," + std::to_string(split->m2()) +
                                  " does not multiply to M = " + std::to_string(M));
        }
    }
    switch (kind) {
        case BasisKind::Position: return build_position_basis(M);
        case BasisKind::Momentum: return build_momentum_basis(M);
        case BasisKind::KQ: return build_kq_basis(*split);
        case BasisKind::ConjugateKQ: return build_conjugate_kq_basis(*split);
        case BasisKind::Q1Q2: return build_q1q2_basis(*split);
        case BasisKind::K1K2: return build_k1k2_basis(*split);
        case BasisKind::CompletePosition:
        case BasisKind::CompleteMomentum: return build_complete_basis(factorize(M), kind);
    }
    throw Error("unknown basis kind");
}

std::uint64_t kq_overlap_exponent(const BiFactorization& bi, std::uint64_t k, std::uint64_t q,
                                  std::uint64_t K, std::uint64_t Q) {
    const std::uint64_t M = bi.modulus();
    const std::uint64_t plus = mul_mod(mul_mod(K, q, M), bi.m1(), M);
    const std::uint64_t minus = mul_mod(mul_mod(k, Q, M), bi.m2(), M);
    return sub_mod(plus, minus, M);
}

std::uint64_t q1q2_overlap_exponent(const BiFactorization& bi, std::uint64_t q1, std::uint64_t q2,
                                    std::uint64_t k1, std::uint64_t k2) {
    const std::uint64_t M = bi.modulus();
    return add_mod(mul_mod(mul_mod(q1, k1, M), bi.m2(), M), mul_mod(mul_mod(q2, k2, M), bi.m1(), M), M);
}

std::uint64_t complete_overlap_exponent(const Factorization& f, const Label& q, const Label& k) {
    const std::uint64_t M = f.modulus();
    if (q.size() != f.size() || k.size() != f.size()) {
        throw InvalidArgument("complete_overlap_exponent: label length mismatch");
    }
    std::uint64_t e = 0;
    for (std::size_t j = 0; j < f.size(); ++j) {
        e = add_mod(e, mul_mod(mul_mod(k[j], q[j], M), f[j].cofactor, M), M);
    }
    return M == 1 ? 0 : e;
}

BasisTable materialize(const LabeledBasis& basis) {
    const std::uint64_t M = basis.dimension();
    if (M > kMaxMaterializedDimension) {
        throw InvalidArgument("materialize: M = " + std::to_string(M) + " exceeds " +
                              std::to_string(kMaxMaterializedDimension));
    }
    BasisTable t;
    t.modulus = M;
    t.scheme = basis.scheme();
    t.labels.reserve(M);
    t.states.reserve(M);
    for (std::uint64_t i = 0; i < M; ++i) {
        t.labels.push_back(basis.label(i));
        t.states.push_back(basis.state(t.labels.back()));
    }
    return t;
}

namespace {

std::uint64_t to_base(std::uint64_t v, std::uint64_t modulus, int base) {
    return base == 1 && v == 0 ? modulus : v;
}

std::uint64_t from_base(std::uint64_t v, std::uint64_t modulus, int base) {
    if (base == 1) {
        if (v < 1 || v > modulus) throw InvalidArgument("basis json: 1-based value out of range");
        return v == modulus ? 0 : v;
    }
    if (v >= modulus) throw InvalidArgument("basis json: 0-based value out of range");
    return v;
}

}  // namespace

std::string basis_to_json(const BasisTable& table, int index_base, int indent) {
    if (index_base != 0 && index_base != 1) throw InvalidArgument("index_base must be 0 or 1");
    nlohmann::ordered_json j;
    j["M"] = table.modulus;
    j["scheme"] = table.scheme;
    j["index_base"] = index_base;
    auto& states = j["states"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < table.states.size(); ++i) {
        nlohmann::ordered_json s;
        std::vector<std::uint64_t> label;
        for (std::size_t k = 0; k < table.labels[i].size(); ++k) {
            label.push_back(to_base(table.labels[i][k], table.scheme[k], index_base));
        }
        std::vector<std::uint64_t> support, phases;
        for (const auto& e : table.states[i].entries()) {
            support.push_back(to_base(e.position, table.modulus, index_base));
            phases.push_back(e.exponent);
        }
        s["label"] = label;
        s["support"] = support;
        s["phase_exponents"] = phases;
        states.push_back(std::move(s));
    }
    return j.dump(indent);
}

BasisTable basis_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("basis json: ") + e.what());
    }
    try {
        BasisTable t;
        t.modulus = j.at("M").get<std::uint64_t>();
        t.scheme = j.at("scheme").get<std::vector<std::uint64_t>>();
        const int base = j.value("index_base", 0);
        if (base != 0 && base != 1) throw InvalidArgument("basis json: index_base must be 0 or 1");
        for (const auto& s : j.at("states")) {
            auto raw_label = s.at("label").get<std::vector<std::uint64_t>>();
            if (raw_label.size() != t.scheme.size()) throw InvalidArgument("basis json: label length mismatch");
            Label label;
            for (std::size_t k = 0; k < raw_label.size(); ++k) label.push_back(from_base(raw_label[k], t.scheme[k], base));
            const auto support = s.at("support").get<std::vector<std::uint64_t>>();
            const auto phases = s.at("phase_exponents").get<std::vector<std::uint64_t>>();
            if (support.size() != phases.size()) throw InvalidArgument("basis json: support/phase length mismatch");
            std::vector<FlatPhaseState::Entry> entries;
            for (std::size_t k = 0; k < support.size(); ++k) {
                entries.push_back({from_base(support[k], t.modulus, base), phases[k]});
            }
            t.labels.push_back(std::move(label));
            t.states.emplace_back(t.modulus, std::move(entries));
        }
        return t;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("basis json: ") + e.what());
    }
}

LocalizationReport localization_demo(const BiFactorization& bi) {
    const std::uint64_t M = bi.modulus();
    std::vector<FlatPhaseState::Entry> entries;
    for (std::uint64_t q2 = 0; q2 < bi.m2(); ++q2) entries.push_back({mul_mod(q2, bi.e2(), M), 0});
    LocalizationReport r{bi, FlatPhaseState(M, std::move(entries)), {}, {}, false};

    const LabeledBasis qq = build_q1q2_basis(bi);
    const LabeledBasis kk = build_k1k2_basis(bi);
    bool ok = true;
    r.q_side.reserve(M);
    r.k_side.reserve(M);
    for (std::uint64_t i = 0; i < M; ++i) {
        const Label ql = qq.label(i);
        r.q_side.push_back(overlap(qq.state(ql), r.psi));
        const Overlap& qo = r.q_side.back();
        if (ql[0] == 0) {
            ok = ok && qo.exact && qo.exact->phase.exponent() == 0 && qo.magnitude_squared_equals(1, bi.m2());
        } else {
            ok = ok && qo.exact_zero;
        }

        const Label kl = kk.label(i);
        r.k_side.push_back(overlap(kk.state(kl), r.psi));
        const Overlap& ko = r.k_side.back();
        if (kl[1] == 0) {
            ok = ok && ko.exact && ko.exact->phase.exponent() == 0 && ko.magnitude_squared_equals(1, bi.m1());
        } else {
            ok = ok && ko.exact_zero;
        }
    }
    r.delta_structure_exact = ok;
    return r;
}

}  // namespace schwinger

#pragma once

// Labeled bases built from a coprime split M = M1 M2 or from the full
// prime-power factorization of M.
//
// Labels are 0-based: slot j of a label ranges over [0, scheme[j]). Writing
// e1 = N1 L1 and e2 = N2 L2 (mod M), the constructions are
//
//   kq        |k,q>   = M1^{-1/2} sum_s omega_{M1}^{k s} |q e2 + s e1>
//   KQ        |K,Q>   = M2^{-1/2} sum_t omega_{M2}^{K t} |Q e1 + t e2>
//   q1q2      |q1,q2> = |q1 e1 + q2 e2>
//   k1k2      |k1,k2> = momentum state k1 L1 + k2 L2
//   complete  |q_1..q_N> = |sum_j q_j N_j L_j>,  |k_1..k_N> = momentum sum_j k_j L_j
//
// With these phases the ladder relations tau(M1)|k,q> = |k+1,q> and
// T(N2 L2)|k,q> = |k,q-1> hold with no residual phase, and
// <kq|KQ> = omega_M^{K q M1 - k Q M2} / sqrt(M).

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "schwinger/numtheory.hpp"
#include "schwinger/phase_algebra.hpp"
#include "schwinger/states.hpp"

namespace schwinger {

using Label = std::vector<std::uint64_t>;

/// x -> (x mod m_1, ..., x mod m_N) and back through sum q_j N_j L_j mod M.
class CrtLabelMap {
public:
    /// Throws NotCoprime unless the moduli are pairwise coprime.
    explicit CrtLabelMap(std::vector<std::uint64_t> moduli);
    explicit CrtLabelMap(const Factorization& f);

    std::uint64_t modulus() const { return modulus_; }
    const std::vector<std::uint64_t>& moduli() const { return moduli_; }
    /// N_j L_j mod M for each slot.
    const std::vector<std::uint64_t>& idempotents() const { return idempotents_; }

    Label forward(std::uint64_t x) const;
    std::uint64_t backward(const Label& label) const;

private:
    std::uint64_t modulus_ = 1;
    std::vector<std::uint64_t> moduli_;
    std::vector<std::uint64_t> idempotents_;
};

enum class BasisKind {
    Position,
    Momentum,
    KQ,             // kq: labels (k, q), moduli (M1, M2)
    ConjugateKQ,    // KQ: labels (K, Q), moduli (M2, M1)
    Q1Q2,           // labels (q1, q2), moduli (M1, M2)
    K1K2,           // labels (k1, k2), moduli (M1, M2)
    CompletePosition,
    CompleteMomentum,
};

std::string_view to_string(BasisKind kind);
/// Accepts the CLI names: position, momentum, kq, KQ, q1q2, k1k2, complete,
/// complete-momentum.
std::optional<BasisKind> parse_basis_kind(std::string_view name);
bool needs_split(BasisKind kind);

/// op |label> = omega_M^{label[slot] * step} |label>.
struct EigenRelation {
    std::string name;
    MonomialOperator op;
    std::size_t slot;
    std::uint64_t step;
};

/// op |label> = |label'> where label'[slot] = label[slot] + delta (mod the
/// slot modulus), with no extra phase.
struct LadderRelation {
    std::string name;
    MonomialOperator op;
    std::size_t slot;
    int delta;
};

/// A basis of M flat-phase states indexed by label tuples. States are built
/// on demand; the object itself only stores the construction parameters.
class LabeledBasis {
public:
    std::uint64_t dimension() const { return modulus_; }
    BasisKind kind() const { return kind_; }
    const std::vector<std::uint64_t>& scheme() const { return scheme_; }
    std::vector<std::string> slot_names() const;
    const std::optional<BiFactorization>& split() const { return split_; }

    /// Row-major: the last slot varies fastest.
    Label label(std::uint64_t index) const;
    std::uint64_t index(const Label& label) const;

    FlatPhaseState state(const Label& label) const;
    FlatPhaseState state_at(std::uint64_t index) const { return state(label(index)); }

    std::vector<EigenRelation> eigen_relations() const;
    std::vector<LadderRelation> ladder_relations() const;

    friend LabeledBasis build_position_basis(std::uint64_t M);
    friend LabeledBasis build_momentum_basis(std::uint64_t M);
    friend LabeledBasis build_kq_basis(const BiFactorization& bi);
    friend LabeledBasis build_conjugate_kq_basis(const BiFactorization& bi);
    friend LabeledBasis build_q1q2_basis(const BiFactorization& bi);
    friend LabeledBasis build_k1k2_basis(const BiFactorization& bi);
    friend LabeledBasis build_complete_basis(const Factorization& f, BasisKind kind);

private:
    LabeledBasis(BasisKind kind, std::uint64_t M, std::vector<std::uint64_t> scheme);

    void check_label(const Label& label) const;

    BasisKind kind_;
    std::uint64_t modulus_;
    std::vector<std::uint64_t> scheme_;
    std::optional<BiFactorization> split_;
    std::optional<CrtLabelMap> crt_;
    std::vector<std::uint64_t> cofactors_;  // L_j for the complete bases
};

LabeledBasis build_position_basis(std::uint64_t M);
LabeledBasis build_momentum_basis(std::uint64_t M);
LabeledBasis build_kq_basis(const BiFactorization& bi);
LabeledBasis build_conjugate_kq_basis(const BiFactorization& bi);
LabeledBasis build_q1q2_basis(const BiFactorization& bi);
LabeledBasis build_k1k2_basis(const BiFactorization& bi);
/// kind is CompletePosition or CompleteMomentum. For M == 1 the basis has a
/// single state with the empty label.
LabeledBasis build_complete_basis(const Factorization& f, BasisKind kind);

/// Builds any kind; split is required for the split-based kinds and ignored
/// otherwise.
LabeledBasis build_basis(BasisKind kind, std::uint64_t M, const std::optional<BiFactorization>& split);

// Closed-form overlap exponents (mod M); every overlap below has magnitude
// 1/sqrt(M).

/// <kq|KQ> = omega_M^{K q M1 - k Q M2} / sqrt(M).
std::uint64_t kq_overlap_exponent(const BiFactorization& bi, std::uint64_t k, std::uint64_t q,
                                  std::uint64_t K, std::uint64_t Q);
/// <q1 q2|k1 k2> = omega_M^{q1 k1 M2 + q2 k2 M1} / sqrt(M).
std::uint64_t q1q2_overlap_exponent(const BiFactorization& bi, std::uint64_t q1, std::uint64_t q2,
                                    std::uint64_t k1, std::uint64_t k2);
/// <q_1..q_N|k_1..k_N> = omega_M^{sum_j k_j q_j L_j} / sqrt(M).
std::uint64_t complete_overlap_exponent(const Factorization& f, const Label& q, const Label& k);

/// A fully materialized basis, the in-memory form of the JSON interchange.
struct BasisTable {
    std::uint64_t modulus = 0;
    std::vector<std::uint64_t> scheme;
    std::vector<Label> labels;
    std::vector<FlatPhaseState> states;

    friend bool operator==(const BasisTable&, const BasisTable&) = default;
};

inline constexpr std::uint64_t kMaxMaterializedDimension = 4096;

/// Throws InvalidArgument above kMaxMaterializedDimension.
BasisTable materialize(const LabeledBasis& basis);

/// Serializes as {"M", "scheme", "index_base", "states": [{"label",
/// "support", "phase_exponents"}]}. With index_base 1, labels and positions
/// print the residue 0 as its modulus.
std::string basis_to_json(const BasisTable& table, int index_base, int indent = 2);
BasisTable basis_from_json(const std::string& text);

/// psi = M2^{-1/2} sum_{q2} |q1 = 0, q2> expanded in the q1q2 and k1k2 bases.
struct LocalizationReport {
    BiFactorization split;
    FlatPhaseState psi;
    std::vector<Overlap> q_side;  // indexed like build_q1q2_basis
    std::vector<Overlap> k_side;  // indexed like build_k1k2_basis
    /// q side is exactly delta_{q1,0}/sqrt(M2), k side exactly delta_{k2,0}/sqrt(M1).
    bool delta_structure_exact = false;
};

LocalizationReport localization_demo(const BiFactorization& bi);

}  // namespace schwinger

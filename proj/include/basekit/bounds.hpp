#pragma once

#include <string>
#include <vector>

#include "basekit/classes.hpp"
#include "basekit/group.hpp"

namespace basekit {

/// Fixed point ratios per prime-order class, with the action degree.
struct FprEntry {
  std::string class_name;
  BigInt class_size;
  Rational fpr;  // |x^G cap H| / |x^G|
};

struct FprTable {
  enum class Source { Live, Ingested };
  Source source = Source::Live;
  std::vector<FprEntry> entries;
  BigInt index = 0;  // |G:H| = |Omega|
  bool certified_complete = false;
};

struct Hypothesis {
  std::string name;
  bool checked = false;
  std::string value;  // exact rational or integer, as text
};

enum class CertificateKind { LemmaQ, PropKey, CorInt, Greedy4 };

struct Certificate {
  CertificateKind kind;
  std::vector<Hypothesis> hypotheses;
  std::string conclusion;
  bool established = false;
};

const char* certificate_kind_name(CertificateKind kind);

/// Fraction of points fixed by x, exact.
Rational fpr_action(const Group& g, const Permutation& x);

/// |x^G cap H| / |x^G| from counts.
Rational fpr_class(const BigInt& intersection, const BigInt& class_size);

/// Fpr table from a live transitive group with point stabilizer G_alpha;
/// certified complete iff the class list is.
FprTable fpr_table_live(const Group& g, Point alpha, const ClassList& classes);

/// Fpr table from ingested class data with fusion.
FprTable fpr_table_from_class_data(const ClassData& d);

/// Sum over classes of |x^G| * fpr^c; an upper bound on the probability
/// that a uniform c-tuple is not a base. May exceed 1; never clamped.
/// Refuses tables that are not certified complete.
Rational qhat(const FprTable& table, std::uint64_t c);

/// Established iff qhat_value < 1; conclusion "b(G) <= c".
Certificate lemma_q_certificate(const Rational& qhat_value, std::uint64_t c);

/// Exact decision of d > |G:H| * (1 - sqrt(1 - qhat3)), by squaring.
/// Requires 0 <= qhat3 < 1 and 1 <= d <= index.
bool subdegree_exceeds_D(const BigInt& d, const BigInt& index, const Rational& qhat3);

/// Established iff qhat3 < 1 and the subdegree exceeds the D threshold;
/// conclusion "G(G) <= 3".
Certificate prop_key_certificate(const BigInt& d, const BigInt& index,
                                 const Rational& qhat3);

/// Established iff m < |H|^2 / (|G| * (1 - sqrt(1 - qhat3))), decided
/// exactly; qhat3 = 0 is the unconditional degenerate case.
Certificate cor_int_certificate(const BigInt& m, const BigInt& h_order,
                                const BigInt& g_order, const Rational& qhat3);

/// Structural hypotheses of the 4-tuple certificate that the caller
/// asserts rather than the arithmetic verifying.
struct Greedy4Assumptions {
  bool unique_largest_suborbit = true;
  bool largest_pairs_equivalent = true;
};

struct Greedy4Breakdown {
  Rational p3;  // all three further points in the largest suborbit
  Rational p2;  // exactly two of them there
  Rational q3;  // pair hit given three points inside
  Rational q2;  // pair hit given two points inside
  Rational p;   // p3*q3 + p2*q2
};

/// The generalized 4-tuple certificate; conclusion "G(G) <= 4".
Certificate greedy4_certificate(const BigInt& n, const BigInt& d1,
                                const BigInt& paired_size, const Rational& qhat4,
                                Greedy4Assumptions assumptions = {},
                                Greedy4Breakdown* breakdown = nullptr);

struct MonteCarloQ {
  Rational estimate;  // fraction of sampled c-tuples that are not bases
  Rational stderr_;   // binomial standard error, rational approximation
  std::uint64_t trials = 0;
};

/// Uniform c-tuples with replacement by default; `distinct` samples
/// without repeated points instead.
MonteCarloQ monte_carlo_Q(const Group& g, std::uint64_t c, std::uint64_t trials,
                          Rng& rng, bool distinct = false);

}  // namespace basekit

#include "basekit/bounds.hpp"

#include <stdexcept>

#include "basekit/greedy.hpp"

namespace basekit {

namespace {

Rational rational_pow(const Rational& r, std::uint64_t c) {
  Rational out = 1;
  for (std::uint64_t i = 0; i < c; ++i) out *= r;
  return out;
}

Hypothesis hyp(std::string name, bool checked, const Rational& value) {
  return Hypothesis{std::move(name), checked, format_rational(value)};
}

}  // namespace

const char* certificate_kind_name(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::LemmaQ: return "lemma-Q";
    case CertificateKind::PropKey: return "prop-key";
    case CertificateKind::CorInt: return "cor-int";
    case CertificateKind::Greedy4: return "greedy4";
  }
  return "?";
}

Rational fpr_action(const Group& g, const Permutation& x) {
  if (x.degree() != g.degree())
    throw std::invalid_argument("fpr_action: degree mismatch");
  return Rational(BigInt(static_cast<std::uint64_t>(x.fixed_point_count())),
                  BigInt(static_cast<std::uint64_t>(g.degree())));
}

Rational fpr_class(const BigInt& intersection, const BigInt& class_size) {
  if (class_size < 1) throw std::invalid_argument("fpr_class: class size < 1");
  if (intersection < 0 || intersection > class_size)
    throw std::invalid_argument("fpr_class: intersection out of range");
  return Rational(intersection, class_size);
}

FprTable fpr_table_live(const Group& g, Point alpha, const ClassList& classes) {
  if (!g.is_transitive())
    throw std::invalid_argument("fpr_table_live: group is not transitive");
  const Group h = g.point_stabilizer(alpha);
  FprTable table;
  table.source = FprTable::Source::Live;
  table.index = g.order() / h.order();
  table.certified_complete = classes.certified_complete;
  for (const auto& cls : classes.classes) {
    const BigInt inter = live_intersection_size(g, h, cls);
    table.entries.push_back({cls.name, cls.size, fpr_class(inter, cls.size)});
  }
  return table;
}

FprTable fpr_table_from_class_data(const ClassData& d) {
  if (!d.has_subgroup)
    throw std::invalid_argument("fpr_table_from_class_data: no subgroup/fusion data");
  validate_class_data(d);
  FprTable table;
  table.source = FprTable::Source::Ingested;
  table.index = d.group_order / *d.subgroup_order;
  table.certified_complete = d.complete;
  for (std::size_t j = 0; j < d.group_classes.size(); ++j) {
    const BigInt inter = fused_intersection_size(d, j);
    table.entries.push_back({d.group_classes[j].name, d.group_classes[j].size,
                             fpr_class(inter, d.group_classes[j].size)});
  }
  return table;
}

Rational qhat(const FprTable& table, std::uint64_t c) {
  if (c < 1) throw std::invalid_argument("qhat: c must be at least 1");
  if (!table.certified_complete)
    throw std::invalid_argument("qhat: class table is not certified complete");
  Rational sum = 0;
  for (const auto& e : table.entries)
    sum += Rational(e.class_size) * rational_pow(e.fpr, c);
  return sum;
}

Certificate lemma_q_certificate(const Rational& qhat_value, std::uint64_t c) {
  Certificate cert;
  cert.kind = CertificateKind::LemmaQ;
  const bool ok = qhat_value < 1;
  cert.hypotheses.push_back(hyp("qhat(G," + std::to_string(c) + ") < 1", ok, qhat_value));
  cert.conclusion = "b(G) <= " + std::to_string(c);
  cert.established = ok;
  return cert;
}

bool subdegree_exceeds_D(const BigInt& d, const BigInt& index, const Rational& qhat3) {
  if (qhat3 < 0) throw std::domain_error("subdegree_exceeds_D: qhat3 < 0");
  if (qhat3 >= 1) throw std::domain_error("subdegree_exceeds_D: qhat3 >= 1");
  if (d < 1 || d > index)
    throw std::invalid_argument("subdegree_exceeds_D: need 1 <= d <= index");
  // d > index*(1 - sqrt(1-q))  <=>  (1 - d/index)^2 < 1 - q, both sides >= 0.
  const Rational r = Rational(1) - Rational(d, index);
  return r * r < Rational(1) - qhat3;
}

Certificate prop_key_certificate(const BigInt& d, const BigInt& index,
                                 const Rational& qhat3) {
  if (d < 1 || d > index)
    throw std::invalid_argument("prop_key_certificate: need 1 <= d <= index");
  Certificate cert;
  cert.kind = CertificateKind::PropKey;
  const bool q_ok = qhat3 >= 0 && qhat3 < 1;
  cert.hypotheses.push_back(hyp("qhat(G,3) < 1", q_ok, qhat3));
  const bool d_ok = q_ok && subdegree_exceeds_D(d, index, qhat3);
  cert.hypotheses.push_back(hyp("largest subdegree > D(G,H)", d_ok, Rational(d)));
  cert.conclusion = "G(G) <= 3";
  cert.established = q_ok && d_ok;
  return cert;
}

Certificate cor_int_certificate(const BigInt& m, const BigInt& h_order,
                                const BigInt& g_order, const Rational& qhat3) {
  if (qhat3 < 0 || qhat3 >= 1)
    throw std::domain_error("cor_int_certificate: qhat3 must be in [0,1)");
  if (m < 1) throw std::invalid_argument("cor_int_certificate: m < 1");
  Certificate cert;
  cert.kind = CertificateKind::CorInt;
  cert.hypotheses.push_back(hyp("qhat(G,3) < 1", true, qhat3));
  bool below;
  if (qhat3 == 0) {
    // S(G,H) degenerates to +infinity; the bound holds for every m.
    below = true;
    cert.hypotheses.push_back(hyp("|H cap H^g| < S(G,H) (qhat3 = 0)", true, Rational(m)));
  } else {
    // m < |H|^2/(|G|(1-sqrt(1-q)))  <=>  1-sqrt(1-q) < t := |H|^2/(|G| m)
    //                               <=>  t >= 1, or (1-t)^2 < 1-q.
    const Rational t = Rational(h_order * h_order, g_order * m);
    if (t >= 1)
      below = true;
    else {
      const Rational one_minus_t = Rational(1) - t;
      below = one_minus_t * one_minus_t < Rational(1) - qhat3;
    }
    cert.hypotheses.push_back(hyp("|H cap H^g| < S(G,H)", below, Rational(m)));
  }
  cert.conclusion = "G(G) <= 3";
  cert.established = below;
  return cert;
}

Certificate greedy4_certificate(const BigInt& n, const BigInt& d1,
                                const BigInt& paired_size, const Rational& qhat4,
                                Greedy4Assumptions assumptions,
                                Greedy4Breakdown* breakdown) {
  if (n < 1 || d1 < 1 || d1 > n)
    throw std::invalid_argument("greedy4_certificate: need 1 <= d1 <= n");
  if (paired_size > d1)
    throw std::invalid_argument("greedy4_certificate: paired_size exceeds d1");
  if (qhat4 < 0 || qhat4 >= 1)
    throw std::domain_error("greedy4_certificate: qhat4 must be in [0,1)");

  const Rational x(d1, n);
  const Rational y(paired_size, d1);
  Greedy4Breakdown b;
  b.p3 = x * x * x;
  b.p2 = Rational(3) * x * x * (Rational(1) - x);
  b.q2 = y;
  b.q3 = Rational(2) * y - y * y;
  b.p = b.p3 * b.q3 + b.p2 * b.q2;
  if (breakdown) *breakdown = b;

  Certificate cert;
  cert.kind = CertificateKind::Greedy4;
  cert.hypotheses.push_back({"unique largest suborbit (asserted by caller)",
                             assumptions.unique_largest_suborbit, "assumed"});
  cert.hypotheses.push_back({"largest 2-point orbits paired equivalent (asserted by caller)",
                             assumptions.largest_pairs_equivalent, "assumed"});
  cert.hypotheses.push_back(hyp("qhat(G,4) < 1", true, qhat4));
  const bool success = b.p + (Rational(1) - qhat4) > 1;
  cert.hypotheses.push_back(hyp("p + (1 - qhat4) > 1", success, b.p));
  cert.conclusion = "G(G) <= 4";
  cert.established = success && assumptions.unique_largest_suborbit &&
                     assumptions.largest_pairs_equivalent;
  return cert;
}

MonteCarloQ monte_carlo_Q(const Group& g, std::uint64_t c, std::uint64_t trials,
                          Rng& rng, bool distinct) {
  if (trials < 1) throw std::invalid_argument("monte_carlo_Q: trials < 1");
  if (!g.is_transitive())
    throw std::invalid_argument("monte_carlo_Q: group is not transitive");
  if (distinct && c > g.degree())
    throw std::invalid_argument("monte_carlo_Q: c exceeds degree for distinct tuples");
  std::uniform_int_distribution<Point> pick(0, static_cast<Point>(g.degree() - 1));
  std::uint64_t failures = 0;
  std::vector<Point> tuple(c);
  for (std::uint64_t t = 0; t < trials; ++t) {
    if (distinct) {
      for (std::size_t i = 0; i < c;) {
        const Point p = pick(rng);
        bool fresh = true;
        for (std::size_t j = 0; j < i; ++j)
          if (tuple[j] == p) {
            fresh = false;
            break;
          }
        if (fresh) tuple[i++] = p;
      }
    } else {
      for (auto& p : tuple) p = pick(rng);
    }
    if (!is_base(g, tuple)) ++failures;
  }
  MonteCarloQ out;
  out.trials = trials;
  out.estimate = Rational(BigInt(failures), BigInt(trials));
  const Rational variance =
      out.estimate * (Rational(1) - out.estimate) / Rational(BigInt(trials));
  const BigInt scale = BigInt(1000000000);
  out.stderr_ = Rational(
      isqrt_floor(numerator(variance) * scale * scale / denominator(variance)), scale);
  return out;
}

}  // namespace basekit

#include "basekit/io.hpp"

#include <fstream>
#include <sstream>

namespace basekit {

namespace {

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("parse error in " + path + ": " + e.what());
  }
  return j;
}

BigInt bigint_from_json(const Json& j, const std::string& field) {
  try {
    if (j.is_string()) return BigInt(j.get<std::string>());
    if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
    if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  } catch (const std::runtime_error&) {
  }
  throw std::runtime_error("field " + field + ": expected an integer or decimal string");
}

std::vector<ConjClass> classes_from_json(const Json& j, const std::string& which) {
  std::vector<ConjClass> out;
  for (const auto& cj : j) {
    ConjClass c;
    c.name = cj.at("name").get<std::string>();
    c.element_order = cj.at("element_order").get<std::uint64_t>();
    c.size = bigint_from_json(cj.at("size"), which + ".classes.size");
    out.push_back(std::move(c));
  }
  return out;
}

Json classes_to_json(const std::vector<ConjClass>& classes) {
  Json out = Json::array();
  for (const auto& c : classes)
    out.push_back({{"name", c.name},
                   {"element_order", c.element_order},
                   {"size", c.size.str()}});
  return out;
}

}  // namespace

Permutation parse_cycles(const std::string& text, std::size_t degree) {
  std::vector<Point> images(degree);
  for (Point i = 0; i < degree; ++i) images[i] = i;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(')
      throw std::invalid_argument("cycle notation: expected '(' in '" + text + "'");
    ++pos;
    std::vector<Point> cycle;
    skip_space();
    while (pos < text.size() && text[pos] != ')') {
      std::size_t used = 0;
      unsigned long long v;
      try {
        v = std::stoull(text.substr(pos), &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("cycle notation: expected a point in '" + text + "'");
      }
      if (v >= degree)
        throw std::invalid_argument("cycle notation: point out of range in '" + text + "'");
      cycle.push_back(static_cast<Point>(v));
      pos += used;
      skip_space();
      if (pos < text.size() && (text[pos] == ',' || text[pos] == ' ')) {
        ++pos;
        skip_space();
      }
    }
    if (pos >= text.size())
      throw std::invalid_argument("cycle notation: unterminated cycle in '" + text + "'");
    ++pos;  // ')'
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const Point from = cycle[i];
      const Point to = cycle[(i + 1) % cycle.size()];
      if (images[from] != from)
        throw std::invalid_argument("cycle notation: repeated point in '" + text + "'");
      images[from] = to;
    }
    skip_space();
  }
  return Permutation(std::move(images));
}

Group group_from_json(const Json& j) {
  const std::size_t degree = j.at("degree").get<std::size_t>();
  std::string name = j.value("name", std::string{});
  std::vector<Permutation> gens;
  for (const auto& gj : j.at("generators")) {
    if (gj.is_string()) {
      gens.push_back(parse_cycles(gj.get<std::string>(), degree));
    } else {
      std::vector<Point> img = gj.get<std::vector<Point>>();
      if (img.size() != degree)
        throw std::runtime_error("generator length differs from degree");
      gens.push_back(Permutation(std::move(img)));
    }
  }
  return Group(degree, std::move(gens), std::move(name));
}

Group load_group_file(const std::string& path) {
  return group_from_json(load_json_file(path));
}

Json group_to_json(const Group& g) {
  Json gens = Json::array();
  for (const auto& p : g.generators()) gens.push_back(p.images());
  return {{"name", g.label()}, {"degree", g.degree()}, {"generators", gens}};
}

ClassData class_data_from_json(const Json& j) {
  if (j.value("version", 0) != 1)
    throw std::runtime_error("class data: unsupported version");
  ClassData d;
  const Json& gj = j.at("group");
  d.group_name = gj.value("name", std::string{});
  d.group_order = bigint_from_json(gj.at("order"), "group.order");
  d.group_classes = classes_from_json(gj.at("classes"), "group");
  if (j.contains("subgroup")) {
    d.has_subgroup = true;
    const Json& sj = j.at("subgroup");
    d.subgroup_name = sj.value("name", std::string{});
    d.subgroup_order = bigint_from_json(sj.at("order"), "subgroup.order");
    d.subgroup_classes = classes_from_json(sj.at("classes"), "subgroup");
    d.fusion = j.at("fusion").get<std::vector<std::size_t>>();
  }
  d.complete = j.value("complete", false);
  validate_class_data(d);
  return d;
}

ClassData load_class_data_file(const std::string& path) {
  return class_data_from_json(load_json_file(path));
}

Json class_data_to_json(const ClassData& d) {
  Json out;
  out["version"] = 1;
  out["group"] = {{"name", d.group_name},
                  {"order", d.group_order.str()},
                  {"classes", classes_to_json(d.group_classes)}};
  if (d.has_subgroup) {
    out["subgroup"] = {{"name", d.subgroup_name.value_or("")},
                       {"order", d.subgroup_order->str()},
                       {"classes", classes_to_json(d.subgroup_classes)}};
    out["fusion"] = d.fusion;
  }
  out["complete"] = d.complete;
  return out;
}

Json rational_to_json(const Rational& r) {
  return {{"num", numerator(r).str()}, {"den", denominator(r).str()}};
}

Rational rational_from_json(const Json& j) {
  return Rational(BigInt(j.at("num").get<std::string>()),
                  BigInt(j.at("den").get<std::string>()));
}

Json certificate_to_json(const Certificate& cert) {
  Json hyps = Json::array();
  for (const auto& h : cert.hypotheses)
    hyps.push_back({{"name", h.name}, {"checked", h.checked}, {"value", h.value}});
  return {{"kind", certificate_kind_name(cert.kind)},
          {"hypotheses", hyps},
          {"conclusion", cert.conclusion},
          {"verdict", cert.established ? "established" : "not-established"}};
}

Json fpr_table_to_json(const FprTable& table) {
  Json entries = Json::array();
  for (const auto& e : table.entries)
    entries.push_back({{"class", e.class_name},
                       {"class_size", e.class_size.str()},
                       {"fpr", rational_to_json(e.fpr)}});
  return {{"source", table.source == FprTable::Source::Live ? "live" : "ingested"},
          {"index", table.index.str()},
          {"certified_complete", table.certified_complete},
          {"entries", entries}};
}

Json greedy_trace_to_json(const GreedyTrace& trace) {
  return {{"base", trace.base},
          {"orbit_sizes", trace.orbit_sizes},
          {"choices", trace.choices},
          {"length", trace.base.size()}};
}

Json suborbit_profile_to_json(const SuborbitProfile& profile) {
  return {{"base_point", profile.base_point},
          {"rank", profile.rank},
          {"subdegrees", profile.subdegrees},
          {"largest_subdegree", profile.largest_subdegree},
          {"largest_count", profile.largest_count},
          {"unique_largest", profile.unique_largest},
          {"suborbits", profile.suborbits}};
}

Json search_outcome_to_json(const SearchOutcome& outcome, bool verbose) {
  Json out = {{"success", outcome.success},
              {"intersection_order", outcome.intersection_order.str()},
              {"threshold", outcome.threshold.str()},
              {"iterations_used", outcome.iterations_used},
              {"conjugator", outcome.conjugator.cycle_string()}};
  if (verbose) {
    Json trace = Json::array();
    for (const auto& s : outcome.trace)
      trace.push_back({{"iteration", s.iteration},
                       {"intersection_order", s.intersection_order.str()}});
    out["trace"] = trace;
  }
  return out;
}

}  // namespace basekit

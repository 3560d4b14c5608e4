#include "nrgit/report.hpp"

#include <cstdlib>
#include <sstream>

#include "nrgit/envelope.hpp"
#include "nrgit/oracle.hpp"
#include "nrgit/vgit.hpp"

namespace nrgit {

using Json = nlohmann::ordered_json;

namespace {

int parse_int(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(text, &used);
  } catch (const std::exception&) {
    throw UsageError("bad " + what + ": '" + text + "'");
  }
  if (used != text.size()) throw UsageError("bad " + what + ": '" + text + "'");
  return v;
}

LinParam make_lin(std::int64_t m, std::int64_t r) {
  if (m <= 0) throw UsageError("--m must be positive");
  return {m, r};
}

void require_degree(int n) {
  if (n < 1) throw UsageError("--n must be at least 1");
}

Json header(const std::string& command, Json inputs) {
  Json doc;
  doc["command"] = command;
  doc["inputs"] = std::move(inputs);
  return doc;
}

std::string weighted_projective(const std::vector<int>& weights) {
  std::string out = "P(";
  for (std::size_t k = 0; k < weights.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(weights[k]);
  }
  return out + ")";
}

Json diff_json(const std::vector<DiffEntry>& diff) {
  Json out = Json::array();
  for (const auto& e : diff) {
    out.push_back({{"check", e.check}, {"subject", e.subject}, {"closed_form", e.closed_form},
                   {"oracle", e.oracle}});
  }
  return out;
}

}  // namespace

Divisor parse_profile(int n, const std::string& text) {
  int inf = 0;
  int zero = 0;
  std::vector<int> roots;
  std::stringstream fields(text);
  std::string field;
  while (std::getline(fields, field, ',')) {
    if (field.empty()) continue;
    const auto eq = field.find('=');
    if (eq == std::string::npos) throw UsageError("profile field without '=': '" + field + "'");
    const std::string key = field.substr(0, eq);
    const std::string value = field.substr(eq + 1);
    if (key == "inf") {
      inf = parse_int(value, "inf multiplicity");
    } else if (key == "zero") {
      zero = parse_int(value, "zero multiplicity");
    } else if (key == "roots") {
      std::stringstream parts(value);
      std::string part;
      while (std::getline(parts, part, '+')) {
        if (!part.empty()) roots.push_back(parse_int(part, "root multiplicity"));
      }
    } else {
      throw UsageError("unknown profile field '" + key + "'");
    }
  }
  try {
    return Divisor::make(n, inf, zero, std::move(roots));
  } catch (const InvalidDivisor& e) {
    throw UsageError(std::string("invalid profile: ") + e.what());
  }
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(text));
    const Integer den(text.substr(slash + 1));
    if (den == 0) throw UsageError("zero denominator in '" + text + "'");
    return Rational(Integer(text.substr(0, slash)), den);
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception&) {
    throw UsageError("bad rational '" + text + "'");
  }
}

int census_max_n() {
  if (const char* env = std::getenv("NRGIT_CENSUS_MAX_N")) {
    return parse_int(env, "NRGIT_CENSUS_MAX_N");
  }
  return kDefaultCensusMaxN;
}

Report cmd_classify(int n, std::int64_t m, std::int64_t r, const std::string& profile) {
  require_degree(n);
  const LinParam lin = make_lin(m, r);
  const Divisor d = parse_profile(n, profile);
  const EnvParams params{n, lin};
  const EnvPoint embedded = restrict_to_X(d);
  const Thresholds t{n, lin};

  Json doc = header("classify", {{"n", n}, {"m", m}, {"r", r}, {"profile", d.to_string()}});
  Json res;
  res["tau"] = to_string(lin.tau());
  res["status_h"] = to_string(classify_H(d, lin));
  res["status_sl2"] = to_string(classify_SL2(d));
  res["status_u"] = to_string(classify_U(d));
  res["envelope"] = {{"point", embedded.to_string()},
                     {"status_group", to_string(group_status(embedded, params))},
                     {"status_torus", to_string(torus_case_status(embedded, params))},
                     {"status_unipotent_envelope", to_string(unipotent_status(embedded, n))}};
  res["thresholds"] = {{"inf_below", to_string(t.lower())}, {"others_below", to_string(t.upper())}};
  doc["result"] = std::move(res);
  doc["notes"] = {"status_h: intrinsic stability for the Borel subgroup with L_{m,r}",
                  "envelope: the point ([1:1:0], sigma) of P^2 x X under SL(2) x G_m",
                  "thresholds: [1:0] compared with (n-tau)/2, other roots with (n+tau)/2"};
  return {std::move(doc), exit_code::kOk};
}

Report cmd_table1(int n, std::int64_t m, std::int64_t r) {
  require_degree(n);
  const LinParam lin = make_lin(m, r);
  Json doc = header("table1", {{"n", n}, {"m", m}, {"r", r}});
  Json rows = Json::array();
  for (const auto& row : table1(EnvParams{n, lin})) {
    rows.push_back({{"fixed_point", row.label()}, {"i", row.i}, {"weight", row.weight.to_string()}});
  }
  doc["result"] = {{"rows", std::move(rows)}};
  doc["notes"] = {"weights of the T1 x T2 fixed points for O_{P^2}(N) (x) L_{m,r}, N symbolic"};
  return {std::move(doc), exit_code::kOk};
}

Report cmd_walls(int n) {
  require_degree(n);
  Json doc = header("walls", {{"n", n}});
  Json wall_list = Json::array();
  Json cells = Json::array();
  for (const auto& cell : walls(n)) {
    if (cell.is_wall()) wall_list.push_back(to_string(cell.lo));
    const Rational sample = cell.is_wall() ? cell.lo : (cell.lo + cell.hi) / 2;
    const QuotientProfile prof = chamber_profile(n, sample);
    Json entry{{"cell", cell.to_string()},
               {"kind", cell.is_wall() ? "wall" : "chamber"},
               {"quotient", to_string(prof.kind)},
               {"ss_equals_s", prof.ss_equals_s}};
    entry["dimension"] = prof.dimension ? Json(*prof.dimension) : Json(nullptr);
    if (!prof.annotations.empty()) entry["annotations"] = prof.annotations;
    cells.push_back(std::move(entry));
  }
  doc["result"] = {{"walls", std::move(wall_list)}, {"cells", std::move(cells)}};
  return {std::move(doc), exit_code::kOk};
}

Report cmd_flips(int n, const std::string& tau_text) {
  require_degree(n);
  const Rational tau = parse_rational(tau_text);
  FlipData f;
  try {
    f = flip_data(n, tau);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  Json doc = header("flips", {{"n", n}, {"tau", to_string(tau)}});
  doc["result"] = {{"flip",
                    {{"s", f.s},
                     {"e_plus", weighted_projective(f.e_plus_weights)},
                     {"e_minus", weighted_projective(f.e_minus_weights)},
                     {"slice_weights", f.slice_weights}}}};
  doc["notes"] = {"crossing the wall blows down E- and blows up E+"};
  return {std::move(doc), exit_code::kOk};
}

Report cmd_census(int n, std::int64_t m, std::int64_t r) {
  const LinParam lin = make_lin(m, r);
  try {
    enumerate_profiles(n, census_max_n());
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const StrongEnvelopeReport env = strong_envelope_report(n, lin);
  const std::vector<DiffEntry> diff = diff_report(n, lin);

  Json doc = header("census", {{"n", n}, {"m", m}, {"r", r}});
  Json res;
  res["tau"] = to_string(lin.tau());
  res["profiles"] = env.stable + env.strictly_semistable + env.unstable;
  res["intrinsic"] = {{"stable", env.stable},
                      {"strictly_semistable", env.strictly_semistable},
                      {"unstable", env.unstable}};
  res["envelope"] = {{"completely_stable", env.completely_stable},
                     {"completely_semistable", env.completely_semistable}};
  res["strong_envelope"] = {{"stable_equality", env.stable_equality},
                            {"semistable_equality", env.semistable_equality},
                            {"inclusion_chain", env.chain_holds},
                            {"violations", env.violations}};
  res["census_diff"] = diff_json(diff);
  doc["result"] = std::move(res);
  const bool clean = env.ok() && diff.empty();
  return {std::move(doc), clean ? exit_code::kOk : exit_code::kDisagreement};
}

Report cmd_unipotent(int n) {
  try {
    enumerate_profiles(n, census_max_n());
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const std::vector<DiffEntry> diff = unipotent_baseline_report(n);
  Json doc = header("unipotent", {{"n", n}});
  doc["result"] = {{"profiles", all_divisor_profiles(n).size()}, {"census_diff", diff_json(diff)}};
  doc["notes"] = {"classify_U against the SL(2) envelope P^2 x X with O(N) (x) O(1)"};
  return {std::move(doc), diff.empty() ? exit_code::kOk : exit_code::kDisagreement};
}

namespace {

void render_into(std::string& out, const Json& node, const std::string& prefix) {
  if (node.is_object()) {
    for (const auto& [key, value] : node.items()) {
      render_into(out, value, prefix.empty() ? key : prefix + "." + key);
    }
  } else if (node.is_array()) {
    if (node.empty()) out += prefix + ": []\n";
    for (std::size_t k = 0; k < node.size(); ++k) {
      render_into(out, node[k], prefix + "[" + std::to_string(k) + "]");
    }
  } else if (node.is_string()) {
    out += prefix + ": " + node.get<std::string>() + "\n";
  } else {
    out += prefix + ": " + node.dump() + "\n";
  }
}

}  // namespace

std::string render_text(const Json& doc) {
  std::string out;
  render_into(out, doc, "");
  return out;
}

std::string render(const Report& report, const std::string& format) {
  if (format == "json") return report.doc.dump(2) + "\n";
  if (format == "text") return render_text(report.doc);
  throw UsageError("unknown format '" + format + "'");
}

namespace {

// Pixel coordinate for a rational on a linear scale, rounded down.
long to_pixel(const Rational& value, const Rational& origin, const Rational& scale) {
  const Rational px = origin + value * scale;
  Integer q = boost::multiprecision::numerator(px) / boost::multiprecision::denominator(px);
  if (px < 0 && Rational(q) != px) q -= 1;
  return static_cast<long>(q);
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string cmd_diagram(int n, std::int64_t m, std::int64_t r, const std::string& n_display) {
  require_degree(n);
  const LinParam lin = make_lin(m, r);
  const Rational big_n = parse_rational(n_display);
  if (big_n <= 0) throw UsageError("--N must be positive");

  const auto rows = table1(EnvParams{n, lin});
  Rational extent = 1;
  for (const auto& row : rows) {
    const Weight2 w = row.weight.eval_at(big_n);
    for (const Rational& c : {w.x.constant(), w.y.constant()}) {
      const Rational a = c < 0 ? Rational(-c) : c;
      if (a > extent) extent = a;
    }
  }
  const int size = 640;
  const int half = size / 2;
  const Rational scale = Rational(half - 80) / extent;

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
      << "\" viewBox=\"0 0 " << size << " " << size << "\">\n"
      << "<title>" << xml_escape("Weight diagram, n=" + std::to_string(n) + " m=" + std::to_string(m) +
                                 " r=" + std::to_string(r) + " N=" + to_string(big_n))
      << "</title>\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << size << "\" height=\"" << size << "\" fill=\"white\"/>\n"
      << "<line x1=\"20\" y1=\"" << half << "\" x2=\"" << size - 20 << "\" y2=\"" << half
      << "\" stroke=\"black\"/>\n"
      << "<line x1=\"" << half << "\" y1=\"" << size - 20 << "\" x2=\"" << half
      << "\" y2=\"20\" stroke=\"black\"/>\n"
      << "<text x=\"" << size - 20 << "\" y=\"" << half - 6
      << "\" text-anchor=\"end\" font-size=\"12\">" << xml_escape("Z = Hom(T1, k*)") << "</text>\n"
      << "<text x=\"" << half + 6 << "\" y=\"32\" font-size=\"12\">" << xml_escape("Z = Hom(T2, k*)")
      << "</text>\n";

  static const char* const kFamilyLabel[] = {"(m(2i-n), r)", "(N+m(2i-n), -N+r)", "(-N+m(2i-n), -N+r)"};
  static const char* const kFamilyClass[] = {"v0", "v1", "v2"};
  for (const auto& row : rows) {
    const Weight2 w = row.weight.eval_at(big_n);
    const long cx = to_pixel(w.x.constant(), half, scale);
    const long cy = to_pixel(-w.y.constant(), half, scale);
    svg << "<circle class=\"" << kFamilyClass[static_cast<int>(row.family)] << "\" cx=\"" << cx
        << "\" cy=\"" << cy << "\" r=\"3\" fill=\"black\"/>\n";
  }
  for (int f = 0; f < 3; ++f) {
    const Weight2 w = rows[static_cast<std::size_t>(f)].weight.eval_at(big_n);  // i = 0 of family f
    const long x = to_pixel(w.x.constant(), half, scale);
    const long y = to_pixel(-w.y.constant(), half, scale);
    svg << "<text x=\"" << x << "\" y=\"" << (f == 0 ? y - 10 : y + 20) << "\" font-size=\"12\">"
        << xml_escape(kFamilyLabel[f]) << "</text>\n";
  }
  svg << "<text x=\"20\" y=\"" << size - 8 << "\" font-size=\"12\">" << xml_escape("(i = 0, ..., n)")
      << "</text>\n</svg>\n";
  return svg.str();
}

}  // namespace nrgit

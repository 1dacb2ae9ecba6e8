#include "secdiv/render.hpp"

#include <sstream>

namespace secdiv {

namespace {

// Appends "+ c*sym" / "- c*sym" with 1-coefficients elided.
void append_term(std::ostream& out, bool& first, const Rational& coeff,
                 const std::string& symbol) {
  if (coeff == 0) return;
  const Rational mag = coeff < 0 ? Rational(-coeff) : coeff;
  if (first) {
    if (coeff < 0) out << "-";
  } else {
    out << (coeff < 0 ? " - " : " + ");
  }
  if (mag != 1 || symbol.empty()) {
    out << rational_str(mag);
    if (!symbol.empty()) out << "*";
  }
  out << symbol;
  first = false;
}

std::string join_terms(
    const std::vector<std::pair<Rational, std::string>>& terms) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [coeff, symbol] : terms) append_term(out, first, coeff, symbol);
  if (first) out << "0";
  return out.str();
}

}  // namespace

Json rational_json(const Rational& q) { return rational_str(q); }

Json params_json(const SecantParams& p) {
  Json j;
  j["g"] = p.g;
  j["r"] = p.r;
  j["d"] = p.d;
  j["t"] = p.t;
  j["n"] = p.n;
  j["s"] = p.s;
  j["a"] = p.a.entries;
  return j;
}

Json class_m_g1_json(const PicClassM_g1& c) {
  Json j;
  j["space"] = "moduli of stable 1-pointed genus-" + std::to_string(c.genus) + " curves";
  j["lambda"] = rational_json(c.lambda);
  j["psi"] = rational_json(c.psi);
  j["delta_irr"] = rational_json(c.delta_irr);
  Json deltas = Json::object();
  for (long i = 1; i <= c.genus - 1; ++i)
    deltas["delta_" + std::to_string(i)] = rational_json(c.delta(i));
  j["delta_i"] = std::move(deltas);
  return j;
}

Json class_m_gn_json(const PicClassM_gn& c) {
  Json j;
  j["space"] = "moduli of stable " + std::to_string(c.npoints) + "-pointed genus-" +
               std::to_string(c.genus) + " curves";
  j["lambda"] = rational_json(c.lambda);
  j["psi_each"] = rational_json(c.psi_each);
  j["delta_irr"] = rational_json(c.delta_irr);
  Json d0j = Json::object();
  for (const auto& [jj, coeff] : c.delta_0j)
    d0j["delta_0:" + std::to_string(jj)] = rational_json(coeff);
  j["delta_0j"] = std::move(d0j);
  Json di0 = Json::object();
  for (const auto& [i, coeff] : c.delta_i0)
    di0["delta_" + std::to_string(i) + ":0"] = rational_json(coeff);
  j["delta_i0"] = std::move(di0);
  j["delta_ij"] = c.unknown_ij ? "not computed (i >= 1, j >= 1)" : "complete";
  return j;
}

Json class_cn_json(const NSClassCn& c) {
  Json j;
  j["space"] = "symmetric product C_" + std::to_string(c.n) + " (genus " +
               std::to_string(c.g) + ")";
  j["theta"] = rational_json(c.theta_coeff);
  j["x"] = rational_json(c.x_coeff);
  if (c.theta_coeff != 0) j["slope"] = rational_json(c.slope());
  return j;
}

std::string class_cn_text(const NSClassCn& c) {
  return join_terms({{c.theta_coeff, "theta"}, {c.x_coeff, "x"}});
}

std::string class_m_g1_text(const PicClassM_g1& c) {
  std::vector<std::pair<Rational, std::string>> terms = {
      {c.lambda, "lambda"}, {c.psi, "psi"}, {c.delta_irr, "delta_irr"}};
  for (long i = 1; i <= c.genus - 1; ++i)
    terms.emplace_back(c.delta(i), "delta_" + std::to_string(i));
  return join_terms(terms);
}

std::string class_m_gn_text(const PicClassM_gn& c) {
  std::vector<std::pair<Rational, std::string>> terms = {
      {c.lambda, "lambda"}, {c.psi_each, "sum psi_i"}, {c.delta_irr, "delta_irr"}};
  for (const auto& [j, coeff] : c.delta_0j)
    terms.emplace_back(coeff, "delta_{0:" + std::to_string(j) + "}");
  for (const auto& [i, coeff] : c.delta_i0)
    terms.emplace_back(coeff, "delta_{" + std::to_string(i) + ":0}");
  std::string out = join_terms(terms);
  if (c.unknown_ij) out += "  [delta_{i:j} with i,j >= 1: not computed]";
  return out;
}

std::string class_cn_latex(const NSClassCn& c) {
  return join_terms({{c.theta_coeff, "\\theta"}, {c.x_coeff, "x"}});
}

std::string class_m_g1_latex(const PicClassM_g1& c) {
  std::vector<std::pair<Rational, std::string>> terms = {
      {c.lambda, "\\lambda"}, {c.psi, "\\psi"}, {c.delta_irr, "\\delta_{\\mathrm{irr}}"}};
  for (long i = 1; i <= c.genus - 1; ++i)
    terms.emplace_back(c.delta(i), "\\delta_{" + std::to_string(i) + "}");
  return join_terms(terms);
}

std::string class_m_gn_latex(const PicClassM_gn& c) {
  std::vector<std::pair<Rational, std::string>> terms = {
      {c.lambda, "\\lambda"},
      {c.psi_each, "\\sum_i \\psi_i"},
      {c.delta_irr, "\\delta_{\\mathrm{irr}}"}};
  for (const auto& [j, coeff] : c.delta_0j)
    terms.emplace_back(coeff, "\\delta_{0:" + std::to_string(j) + "}");
  for (const auto& [i, coeff] : c.delta_i0)
    terms.emplace_back(coeff, "\\delta_{" + std::to_string(i) + ":0}");
  return join_terms(terms);
}

}  // namespace secdiv

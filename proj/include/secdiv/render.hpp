#pragma once

#include <string>

#include <json.hpp>

#include "secdiv/counts.hpp"
#include "secdiv/moduli.hpp"
#include "secdiv/params.hpp"
#include "secdiv/symprod.hpp"

namespace secdiv {

using Json = nlohmann::ordered_json;

// Rationals serialize as strings, "p" or "p/q".
Json rational_json(const Rational& q);

Json params_json(const SecantParams& p);
Json class_m_g1_json(const PicClassM_g1& c);
Json class_m_gn_json(const PicClassM_gn& c);
Json class_cn_json(const NSClassCn& c);

// Plain-text one-liners ("5*theta - 10*x", "-lambda + 6*psi - ...").
std::string class_cn_text(const NSClassCn& c);
std::string class_m_g1_text(const PicClassM_g1& c);
std::string class_m_gn_text(const PicClassM_gn& c);

// LaTeX forms using the conventional symbols.
std::string class_cn_latex(const NSClassCn& c);
std::string class_m_g1_latex(const PicClassM_g1& c);
std::string class_m_gn_latex(const PicClassM_gn& c);

}  // namespace secdiv

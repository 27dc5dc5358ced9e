#pragma once

#include "qindex/integrality.hpp"

#include <iosfwd>

namespace qindex {

enum class Format { Text, Latex, Json };

Format parse_format(const std::string& s); // "text" | "latex" | "json"

// plain one-line rendering, terms in descending monomial order
std::string render_expression(const GradedPolynomial& expr, Format f);

std::string render_formula(const IndexFormula& f, Format fmt);
IndexFormula parse_formula_json(const std::string& text);

std::string render_conditions(const std::vector<IndexFormula>& fs,
                              const std::vector<IntegralityCondition>& conds, Format fmt);

// manifold data file: {"name", "m", "values":[{"exps":{..},"value":{num,den}}]}
ManifoldCharData parse_manifold_json(const std::string& text);
std::string render_manifold_json(const ManifoldCharData& data);

} // namespace qindex

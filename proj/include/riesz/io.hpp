#pragma once

#include "riesz/dp.hpp"
#include "riesz/factorize.hpp"
#include "riesz/seq/operators.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <variant>

namespace riesz::io {

using json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

/// One of the three operator spec kinds accepted on the command line.
using OperatorSpec = std::variant<MultiTensor, seq::DiagBilinear, seq::WeightedCompOp>;

json to_json(const Rational& r);
json to_json(const FinVector& v);
json to_json(const MultiTensor& t);
json to_json(const seq::EvConstSeq& s);
json to_json(const seq::DiagBilinear& a);
json to_json(const seq::WeightedCompOp& t);
json to_json(const OperatorSpec& spec);
json to_json(const DPWitness& w);
json to_json(const DPVerdict& v);
json to_json(const MultimorphismFactorization& f);

// All parsers throw ParseError on schema violations.
Rational rational_from_json(const json& j);
FinVector vector_from_json(const json& j);
MultiTensor tensor_from_json(const json& j);
seq::EvConstSeq sequence_from_json(const json& j);
seq::DiagBilinear diag_from_json(const json& j);
seq::WeightedCompOp comp_from_json(const json& j);
OperatorSpec spec_from_json(const json& j);
DPWitness witness_from_json(const json& j);

/// Parses JSON text; ParseError on malformed input.
json parse_text(std::string_view text);
OperatorSpec parse_spec(std::string_view text);

/// Canonical text form: two-space indented JSON plus a trailing newline.
std::string dump(const json& j);

}  // namespace riesz::io

#pragma once

#include <json.hpp>
#include <string>

#include "aybe/jmatrix.hpp"
#include "aybe/laurent.hpp"
#include "aybe/tensor.hpp"
#include "aybe/verify.hpp"

namespace aybe {

// All index output is 1-based and lexicographically sorted; rationals are
// "p/q" strings. nlohmann::ordered_json keeps the field order stable, so
// serialized output is byte-identical across runs.
using Json = nlohmann::ordered_json;

Json to_json(const Tensor2& t);
Json to_json(const Tensor3& t);
Json to_json(const BlockedJ& j);
Json to_json(const VerifyReport& report);
Json laurent_to_json(const LaurentTensor& lt, int max_order);

// Aligned (i, j, k, l, value) columns.
std::string tensor2_text(const Tensor2& t);

} // namespace aybe

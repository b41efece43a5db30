#pragma once

#include <json.hpp>

#include "laceq/bijection.hpp"
#include "laceq/identities.hpp"
#include "laceq/lacing.hpp"
#include "laceq/partitions.hpp"
#include "laceq/series.hpp"

/*
 * JSON forms used by the CLI and the file interfaces:
 *
 *   series       {"trunc_q": N, "trunc_z": M,
 *                 "terms": [[zdeg, qdeg, "coefficient"], ...]}
 *                with coefficients as decimal strings, terms sorted by
 *                (z-degree, q-degree);
 *   lace class   {"n": N, "strands": [{"start": i, "end": j, "mult": m}, ...]};
 *   cut data     {"eta": <lace class>,
 *                 "mus": [{"i":, "j":, "k":, "rows":, "cols":}, ...],
 *                 "nus": [{"i":, "k":, "parts": [..]}, ...]};
 *   report       {"identity":, "dims":, "w":, "orientation":, "trunc_q":,
 *                 "trunc_z":, "class_count":, "equal":, "first_mismatch":,
 *                 "lhs":, "rhs":}.
 */
namespace laceq {

void to_json(nlohmann::json& j, const TruncatedSeries& s);
TruncatedSeries series_from_json(const nlohmann::json& j);

void to_json(nlohmann::json& j, const Partition& p);
Partition partition_from_json(const nlohmann::json& j);

void to_json(nlohmann::json& j, const LaceClass& eta);
LaceClass lace_class_from_json(const nlohmann::json& j);

void to_json(nlohmann::json& j, const CutData& cut);
CutData cut_data_from_json(const nlohmann::json& j);

void to_json(nlohmann::json& j, const IdentityReport& report);

}  // namespace laceq

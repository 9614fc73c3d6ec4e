#pragma once

#include <symcone/coneverify.hpp>
#include <symcone/trees.hpp>

#include <json.hpp>

namespace symcone {

using Json = nlohmann::ordered_json;

Json to_json(const Partition &p);
Json to_json(const Multipartition &m);
Json to_json(const OrderedZeroPartition &mu);
Json to_json(const Labeling &l);
Json to_json(const BigRational &q);
Json to_json(const AlphaRat &f);
Json to_json(const ZRat &f);
Json to_json(const FixedSector &s);
Json to_json(const EdgeClass &e);
Json to_json(const SeriesIndex &idx);
Json to_json(const DecoratedTree &t);
Json to_json(const PoleReport &rep);
Json to_json(const RecursionReport &rep, bool with_rows = false);

/// Throws Invalid on malformed input.
Partition partition_from_json(const Json &j);
Multipartition multipartition_from_json(const Json &j);
BigRational rational_from_json(const Json &j);
/// Accepts {"mu": [...], "sigma": [[...], ...]} or a bare sigma array.
FixedSector sector_from_json(const Json &j);
DecoratedTree tree_from_json(const Json &j);

/// Denominator of f as a product of (z - w) factors.
std::string zrat_denominator_string(const ZRat &f);
std::string zrat_numerator_string(const ZRat &f);

} // namespace symcone

#pragma once

#include <vector>

#include <nlohmann/json.hpp>

#include "supertab/bigint.hpp"
#include "supertab/borel.hpp"
#include "supertab/branching.hpp"
#include "supertab/lr.hpp"
#include "supertab/partition.hpp"
#include "supertab/tableau.hpp"
#include "supertab/verify.hpp"

// JSON encodings. Partitions are arrays of positive integers, Borel words
// strings over {d,e}, letters "3" / "2b", big integers decimal strings.
namespace supertab {

using nlohmann::json;

json to_json(const Partition& p);
json to_json(const BorelSequence& b);
json to_json(const Letter& l);
json to_json(const Content& c);
json to_json(const Weight& w);
json to_json(const Tableau& t);
json to_json(const BranchingChain& c);
json to_json(const KostkaTable& table);
json to_json(const BranchMultiplicityReport& report);
json to_json(const IndependenceReport& report);
json to_json(const HoweReport& report);
json to_json(const BigInt& value);

// Parsers throw std::invalid_argument on schema violations.
Partition partition_from_json(const json& j);
BorelSequence borel_from_json(const json& j);
Letter letter_from_json(const json& j);
Content content_from_json(const json& j);
Tableau tableau_from_json(const json& j);
BranchingChain chain_from_json(const json& j);

}  // namespace supertab

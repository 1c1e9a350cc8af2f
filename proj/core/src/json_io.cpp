#include "supertab/json_io.hpp"

#include <stdexcept>
#include <string>

namespace supertab {

namespace {

json int_array(const std::vector<int>& values) {
  json out = json::array();
  for (int v : values) out.push_back(v);
  return out;
}

std::vector<int> int_array_from(const json& j, const char* what) {
  if (!j.is_array()) throw std::invalid_argument(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) {
      throw std::invalid_argument(std::string(what) + " entries must be integers");
    }
    out.push_back(v.get<int>());
  }
  return out;
}

}  // namespace

json to_json(const Partition& p) { return int_array(p.parts()); }

json to_json(const BorelSequence& b) { return b.to_string(); }

json to_json(const Letter& l) { return l.encode(); }

json to_json(const Content& c) {
  return json{{"unbarred", int_array(c.unbarred)}, {"barred", int_array(c.barred)}};
}

json to_json(const Weight& w) {
  return json{{"delta", int_array(w.delta)}, {"epsilon", int_array(w.epsilon)}};
}

json to_json(const Tableau& t) {
  json rows = json::array();
  for (const auto& row : t.rows()) {
    json letters = json::array();
    for (const auto& l : row) letters.push_back(to_json(l));
    rows.push_back(std::move(letters));
  }
  return json{{"shape", to_json(t.shape())}, {"rows", std::move(rows)}};
}

json to_json(const BranchingChain& c) {
  json out = json::array();
  for (const auto& step : c.steps) {
    out.push_back(json{{"m", step.m}, {"n", step.n}, {"lambda", to_json(step.lambda)}});
  }
  return out;
}

json to_json(const KostkaTable& table) {
  json entries = json::array();
  for (const auto& [content, count] : table.entries) {
    entries.push_back(json{{"content", to_json(content)}, {"count", count}});
  }
  return entries;
}

json to_json(const BranchMultiplicityReport& report) {
  json mismatches = json::array();
  for (const auto& m : report.mismatches) {
    mismatches.push_back(
        json{{"sigma", to_json(m.sigma)}, {"expected", m.expected}, {"got", m.got}});
  }
  return json{{"ok", report.ok},
              {"candidates", report.candidates},
              {"max_multiplicity", report.max_multiplicity},
              {"mismatches", std::move(mismatches)}};
}

json to_json(const IndependenceReport& report) {
  json borels = json::array();
  for (const auto& b : report.borels) borels.push_back(to_json(b));
  json out{{"ok", report.ok},
           {"borels", std::move(borels)},
           {"tables", to_json(report.table)},
           {"total", report.table.total()}};
  if (report.difference) {
    const auto& d = *report.difference;
    out["difference"] = json{{"first", to_json(d.first)},
                             {"second", to_json(d.second)},
                             {"content", to_json(d.content)},
                             {"first_count", d.first_count},
                             {"second_count", d.second_count}};
  }
  return out;
}

json to_json(const HoweReport& report) {
  return json{{"ok", report.ok},
              {"lhs", to_json(report.lhs)},
              {"rhs", to_json(report.rhs)},
              {"terms", report.terms}};
}

json to_json(const BigInt& value) { return to_decimal(value); }

Partition partition_from_json(const json& j) {
  auto parts = int_array_from(j, "partition");
  for (int p : parts) {
    if (p <= 0) throw std::invalid_argument("partition parts must be positive");
  }
  return Partition(std::move(parts));
}

BorelSequence borel_from_json(const json& j) {
  if (!j.is_string()) throw std::invalid_argument("Borel word must be a string");
  return BorelSequence::parse(j.get<std::string>());
}

Letter letter_from_json(const json& j) {
  if (!j.is_string()) throw std::invalid_argument("letter must be a string");
  const auto text = j.get<std::string>();
  if (!text.empty() && text.back() == '\'') {
    throw std::invalid_argument("JSON letters mark bars with 'b'");
  }
  return Letter::decode(text);
}

Content content_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("content must be an object");
  return Content{int_array_from(j.at("unbarred"), "unbarred"),
                 int_array_from(j.at("barred"), "barred")};
}

Tableau tableau_from_json(const json& j) {
  if (!j.is_object() || !j.contains("rows")) {
    throw std::invalid_argument("tableau must be an object with \"rows\"");
  }
  std::vector<Tableau::Row> rows;
  for (const auto& row : j.at("rows")) {
    Tableau::Row letters;
    for (const auto& l : row) letters.push_back(letter_from_json(l));
    rows.push_back(std::move(letters));
  }
  Tableau t(std::move(rows));
  if (j.contains("shape") && partition_from_json(j.at("shape")) != t.shape()) {
    throw std::invalid_argument("tableau shape does not match its rows");
  }
  return t;
}

BranchingChain chain_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("chain must be an array");
  BranchingChain chain;
  for (const auto& step : j) {
    chain.steps.push_back(ChainStep{step.at("m").get<int>(), step.at("n").get<int>(),
                                    partition_from_json(step.at("lambda"))});
  }
  return chain;
}

}  // namespace supertab

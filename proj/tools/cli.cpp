#include "cli.hpp"

#include <charconv>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "supertab/supertab.hpp"

namespace supertab::cli {

namespace {

// Raised for semantically bad flag values; the message names the flag.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { kText, kLatex, kJson };

struct Options {
  int m = 0;
  int n = 0;
  int k = 0;
  int d = 0;
  std::string borel;
  std::string lambda;
  std::string content;
  std::string tableau;
  std::string format = "text";
  std::optional<std::size_t> limit;
};

struct Context {
  Options opts;
  std::uint64_t max_nodes = kDefaultMaxNodes;
  std::ostream* out = nullptr;
  bool borel_given = false;
  bool content_given = false;
  bool m_given = false;
  bool n_given = false;

  Format format() const {
    if (opts.format == "json") return Format::kJson;
    if (opts.format == "latex") return Format::kLatex;
    return Format::kText;
  }
};

Partition parse_lambda(const std::string& text) {
  std::vector<int> parts;
  if (!text.empty()) {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      int value = 0;
      auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
      if (item.empty() || ec != std::errc() || ptr != item.data() + item.size() ||
          value < 0) {
        throw UsageError("--lambda: malformed part '" + item + "'");
      }
      parts.push_back(value);
    }
    if (text.back() == ',') throw UsageError("--lambda: trailing comma");
  }
  try {
    return Partition(std::move(parts));
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--lambda: ") + e.what());
  }
}

BorelSequence resolve_borel(const Context& ctx) {
  if (!ctx.borel_given) return standard(ctx.opts.m, ctx.opts.n);
  BorelSequence b;
  try {
    b = BorelSequence::parse(ctx.opts.borel);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--borel: ") + e.what());
  }
  if (b.m() != ctx.opts.m || b.n() != ctx.opts.n) {
    throw UsageError("--borel: '" + ctx.opts.borel + "' must contain exactly " +
                     std::to_string(ctx.opts.m) + " 'd' and " +
                     std::to_string(ctx.opts.n) + " 'e'");
  }
  return b;
}

Partition resolve_hook_lambda(const Context& ctx) {
  Partition lambda = parse_lambda(ctx.opts.lambda);
  if (!is_hook(lambda, ctx.opts.m, ctx.opts.n)) {
    throw UsageError("--lambda: " + lambda.to_string() + " is not a (" +
                     std::to_string(ctx.opts.m) + "|" + std::to_string(ctx.opts.n) +
                     ")-hook partition");
  }
  return lambda;
}

std::optional<Content> resolve_content(const Context& ctx) {
  if (!ctx.content_given) return std::nullopt;
  Content content;
  try {
    content = Content::parse(ctx.opts.content);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--content: ") + e.what());
  }
  if (content.unbarred.size() != static_cast<std::size_t>(ctx.opts.m) ||
      content.barred.size() != static_cast<std::size_t>(ctx.opts.n)) {
    throw UsageError("--content: expected " + std::to_string(ctx.opts.m) +
                     " unbarred and " + std::to_string(ctx.opts.n) +
                     " barred counts");
  }
  return content;
}

Tableau parse_tableau(const std::string& text) {
  std::vector<Tableau::Row> rows;
  std::stringstream rows_in(text);
  std::string row_text;
  try {
    while (std::getline(rows_in, row_text, '/')) {
      Tableau::Row row;
      std::stringstream letters_in(row_text);
      std::string token;
      while (std::getline(letters_in, token, ',')) row.push_back(Letter::decode(token));
      if (row.empty()) throw std::invalid_argument("empty row");
      rows.push_back(std::move(row));
    }
    return Tableau(std::move(rows));
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--tableau: ") + e.what());
  }
}

std::string chain_text(const BranchingChain& chain) {
  std::string line;
  for (std::size_t i = 0; i < chain.steps.size(); ++i) {
    if (i) line += " > ";
    line += chain.steps[i].lambda.to_string();
  }
  return line;
}

std::size_t shown(const Context& ctx, std::size_t available) {
  return ctx.opts.limit ? std::min(*ctx.opts.limit, available) : available;
}

int cmd_enumerate(const Context& ctx) {
  const BorelSequence b = resolve_borel(ctx);
  const Partition lambda = resolve_hook_lambda(ctx);
  EnumerationOptions options;
  options.content = resolve_content(ctx);
  options.max_nodes = ctx.max_nodes;
  const auto tableaux = enumerate_tableaux(b, lambda, options);
  const std::size_t count = shown(ctx, tableaux.size());
  std::ostream& out = *ctx.out;
  switch (ctx.format()) {
    case Format::kJson: {
      json list = json::array();
      for (std::size_t i = 0; i < count; ++i) list.push_back(to_json(tableaux[i]));
      out << json{{"count", tableaux.size()}, {"tableaux", std::move(list)}}.dump()
          << '\n';
      break;
    }
    case Format::kLatex:
      for (std::size_t i = 0; i < count; ++i) {
        out << render(tableaux[i], RenderFormat::kLatex) << '\n';
      }
      break;
    case Format::kText:
      for (std::size_t i = 0; i < count; ++i) {
        if (i) out << '\n';
        out << render(tableaux[i], RenderFormat::kText) << '\n';
      }
      break;
  }
  return kOk;
}

int cmd_branch(const Context& ctx) {
  const BorelSequence b = resolve_borel(ctx);
  if (b.empty()) throw UsageError("--borel: branching needs m + n >= 1");
  const auto sigmas = branch(b, resolve_hook_lambda(ctx));
  if (ctx.format() == Format::kJson) {
    json list = json::array();
    for (const auto& s : sigmas) list.push_back(to_json(s));
    *ctx.out << list.dump() << '\n';
  } else {
    for (const auto& s : sigmas) *ctx.out << s << '\n';
  }
  return kOk;
}

int cmd_chains(const Context& ctx) {
  const BorelSequence b = resolve_borel(ctx);
  const auto all = chains(b, resolve_hook_lambda(ctx), ctx.max_nodes);
  const std::size_t count = shown(ctx, all.size());
  if (ctx.format() == Format::kJson) {
    json list = json::array();
    for (std::size_t i = 0; i < count; ++i) list.push_back(to_json(all[i]));
    *ctx.out << json{{"count", all.size()}, {"chains", std::move(list)}}.dump() << '\n';
  } else {
    for (std::size_t i = 0; i < count; ++i) *ctx.out << chain_text(all[i]) << '\n';
  }
  return kOk;
}

int cmd_dim(const Context& ctx) {
  const BigInt dim = dimension(resolve_borel(ctx), resolve_hook_lambda(ctx));
  if (ctx.format() == Format::kJson) {
    *ctx.out << json{{"dimension", to_json(dim)}}.dump() << '\n';
  } else {
    *ctx.out << dim << '\n';
  }
  return kOk;
}

int cmd_kostka(const Context& ctx) {
  const BorelSequence b = resolve_borel(ctx);
  const Partition lambda = resolve_hook_lambda(ctx);
  if (auto content = resolve_content(ctx)) {
    const auto count = super_kostka(b, lambda, *content, ctx.max_nodes);
    if (ctx.format() == Format::kJson) {
      *ctx.out << json{{"count", count}}.dump() << '\n';
    } else {
      *ctx.out << count << '\n';
    }
    return kOk;
  }
  const KostkaTable table = kostka_table(b, lambda, ctx.max_nodes);
  if (ctx.format() == Format::kJson) {
    *ctx.out << json{{"table", to_json(table)}, {"total", table.total()}}.dump() << '\n';
  } else {
    for (const auto& [content, count] : table.entries) {
      *ctx.out << content.to_string() << ' ' << count << '\n';
    }
  }
  return kOk;
}

int report(const Context& ctx, bool ok, const json& body, const std::string& text) {
  if (ctx.format() == Format::kJson) {
    *ctx.out << body.dump() << '\n';
  } else {
    *ctx.out << text << '\n';
  }
  return ok ? kOk : kVerificationFailed;
}

int cmd_verify_independence(const Context& ctx) {
  const Partition lambda = resolve_hook_lambda(ctx);
  const auto result = verify_borel_independence(ctx.opts.m, ctx.opts.n, lambda,
                                                ctx.max_nodes);
  std::string text = result.ok ? "ok" : "FAILED";
  text += ": " + std::to_string(result.borels.size()) + " Borels, " +
          std::to_string(result.table.entries.size()) + " contents, " +
          std::to_string(result.table.total()) + " tableaux";
  if (result.difference) {
    const auto& d = *result.difference;
    text += "; " + d.first.to_string() + " vs " + d.second.to_string() + " at " +
            d.content.to_string() + ": " + std::to_string(d.first_count) + " != " +
            std::to_string(d.second_count);
  }
  return report(ctx, result.ok, to_json(result), text);
}

int cmd_verify_branching(const Context& ctx) {
  const BorelSequence b = resolve_borel(ctx);
  if (b.empty()) throw UsageError("--borel: branching needs m + n >= 1");
  const auto result = verify_branch_multiplicities(b, resolve_hook_lambda(ctx));
  std::string text = result.ok ? "ok" : "FAILED";
  text += ": " + std::to_string(result.candidates) + " candidates, max multiplicity " +
          std::to_string(result.max_multiplicity);
  for (const auto& m : result.mismatches) {
    text += "\n" + m.sigma.to_string() + " expected " + std::to_string(m.expected) +
            " got " + std::to_string(m.got);
  }
  return report(ctx, result.ok, to_json(result), text);
}

int cmd_verify_howe(const Context& ctx) {
  if (ctx.opts.k < 0) throw UsageError("--k: must be nonnegative");
  if (ctx.opts.d < 0) throw UsageError("--d: must be nonnegative");
  std::vector<BorelSequence> borels;
  if (ctx.borel_given) {
    borels.push_back(resolve_borel(ctx));
  } else {
    borels = all_sequences(ctx.opts.m, ctx.opts.n);
  }
  bool ok = true;
  json results = json::array();
  std::string text;
  for (const auto& b : borels) {
    const auto r = verify_howe_dimension(ctx.opts.m, ctx.opts.n, ctx.opts.k, ctx.opts.d, b);
    ok = ok && r.ok;
    json entry = to_json(r);
    entry["borel"] = to_json(b);
    results.push_back(std::move(entry));
    if (!text.empty()) text += '\n';
    text += (r.ok ? "ok " : "FAILED ") + b.to_string() + ": lhs=" + to_decimal(r.lhs) +
            " rhs=" + to_decimal(r.rhs);
  }
  return report(ctx, ok, json{{"ok", ok}, {"results", std::move(results)}}, text);
}

int cmd_render(const Context& ctx) {
  const Tableau t = parse_tableau(ctx.opts.tableau);
  if ((ctx.m_given || ctx.n_given) && !t.valid_for(ctx.opts.m, ctx.opts.n)) {
    throw UsageError("--tableau: letter outside the (" + std::to_string(ctx.opts.m) +
                     "|" + std::to_string(ctx.opts.n) + ") alphabet");
  }
  RenderFormat format = RenderFormat::kText;
  if (ctx.format() == Format::kLatex) format = RenderFormat::kLatex;
  if (ctx.format() == Format::kJson) format = RenderFormat::kJson;
  const std::string body = render(t, format);
  *ctx.out << body;
  if (!body.empty()) *ctx.out << '\n';
  return kOk;
}

std::uint64_t parse_max_nodes(const std::optional<std::string>& env) {
  if (!env || env->empty()) return kDefaultMaxNodes;
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(env->data(), env->data() + env->size(), value);
  if (ec != std::errc() || ptr != env->data() + env->size() || value == 0) {
    throw UsageError("SUPERTAB_MAX_NODES: expected a positive integer, got '" + *env +
                     "'");
  }
  return value;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::optional<std::string>& max_nodes_env) {
  Context ctx;
  ctx.out = &out;

  CLI::App app{"Branching rules and b-semistandard tableaux for gl(m|n)", "supertab"};
  app.require_subcommand(1);

  struct Verb {
    const char* name;
    const char* help;
    std::function<int(const Context&)> action;
    bool rank = true;
    bool borel = true;
    bool lambda = true;
    bool content = false;
    bool limit = false;
    bool howe = false;
    bool tableau = false;
  };
  const std::vector<Verb> verbs = {
      {"enumerate", "List b-semistandard tableaux of shape lambda", cmd_enumerate,
       true, true, true, true, true},
      {"branch", "One branching step along the last symbol of the Borel word",
       cmd_branch},
      {"chains", "Gelfand-Tsetlin chains from iterated branching", cmd_chains, true,
       true, true, false, true},
      {"dim", "Dimension of the simple module labelled by lambda", cmd_dim},
      {"kostka", "Super Kostka number, or the full table without --content",
       cmd_kostka, true, true, true, true},
      {"verify-independence", "Check Kostka tables agree across all Borels",
       cmd_verify_independence, true, false},
      {"verify-branching", "Check branching multiplicities against LR coefficients",
       cmd_verify_branching},
      {"verify-howe", "Check the Howe duality dimension identity in degree d",
       cmd_verify_howe, true, true, false, false, false, true},
      {"render", "Render a tableau given as rows '1,1,1/2,2/1b'", cmd_render, true,
       false, false, false, false, false, true},
  };

  const std::function<int(const Context&)>* chosen = nullptr;
  std::vector<std::pair<CLI::App*, const Verb*>> subs;
  for (const auto& verb : verbs) {
    CLI::App* sub = app.add_subcommand(verb.name, verb.help);
    auto* m = sub->add_option("--m", ctx.opts.m, "number of even coordinates")
                  ->check(CLI::NonNegativeNumber);
    auto* n = sub->add_option("--n", ctx.opts.n, "number of odd coordinates")
                  ->check(CLI::NonNegativeNumber);
    if (!verb.tableau) {
      m->required();
      n->required();
    }
    if (verb.borel) {
      sub->add_option("--borel", ctx.opts.borel,
                      "Borel word over {d,e}; defaults to d^m e^n");
    }
    if (verb.lambda) {
      sub->add_option("--lambda", ctx.opts.lambda, "partition, e.g. 3,2,1")->required();
    }
    if (verb.content) {
      sub->add_option("--content", ctx.opts.content,
                      "unbarred counts ':' barred counts, e.g. 2,2:2");
    }
    if (verb.limit) {
      sub->add_option("--limit", ctx.opts.limit, "print at most this many items");
    }
    if (verb.howe) {
      sub->add_option("--k", ctx.opts.k, "rank of the dual gl(k)")->required();
      sub->add_option("--d", ctx.opts.d, "polynomial degree")->required();
    }
    if (verb.tableau) {
      sub->add_option("--tableau", ctx.opts.tableau, "rows separated by '/'")
          ->required();
    }
    sub->add_option("--format", ctx.opts.format, "text, latex or json")
        ->check(CLI::IsMember({"text", "latex", "json"}));
    subs.emplace_back(sub, &verb);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  for (const auto& [sub, verb] : subs) {
    if (!sub->parsed()) continue;
    chosen = &verb->action;
    ctx.borel_given = verb->borel && sub->count("--borel") > 0;
    ctx.content_given = verb->content && sub->count("--content") > 0;
    ctx.m_given = sub->count("--m") > 0;
    ctx.n_given = sub->count("--n") > 0;
  }

  try {
    ctx.max_nodes = parse_max_nodes(max_nodes_env);
    return (*chosen)(ctx);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const SearchLimitExceeded& e) {
    err << "error: " << e.what() << "; raise SUPERTAB_MAX_NODES\n";
    return kSearchLimit;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const SizeError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace supertab::cli

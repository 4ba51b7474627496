// simplervoice: ingest product/n-gram/lexicon inputs into a workspace, describe
// products as key messages with pictographs, and compare opinion-score files.
//
// Exit codes: 0 ok, 2 input error, 3 product not found, 4 generation failure,
// 5 evaluation error.

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "simplervoice/evalstats.hpp"
#include "simplervoice/manifest.hpp"
#include "simplervoice/workspace.hpp"

namespace sv = simplervoice;

namespace {

enum Exit : int { kOk = 0, kInputError = 2, kNotFound = 3, kGenerationFailure = 4, kEvalError = 5 };

int exit_code_for(sv::Errc code) {
  switch (code) {
    case sv::Errc::NotFound: return kNotFound;
    case sv::Errc::NoVerbFound:
    case sv::Errc::NotInTree:
    case sv::Errc::NotALeaf: return kGenerationFailure;
    case sv::Errc::LengthMismatch:
    case sv::Errc::ScoreOutOfRange:
    case sv::Errc::EmptyTable: return kEvalError;
    default: return kInputError;
  }
}

std::string shortest(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return ec == std::errc{} ? std::string(buf, ptr) : std::to_string(x);
}

sv::fs::path resolve_workspace(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("SIMPLERVOICE_WORKSPACE"); env && *env) return env;
  return "workspace";
}

struct IngestArgs {
  sv::InputPaths inputs;
  std::string inputs_dir;
  std::string workspace;
};

int run_ingest(IngestArgs& args) {
  if (!args.inputs_dir.empty()) {
    const auto defaults = sv::workspace_layout(args.inputs_dir);
    auto fill = [](sv::fs::path& p, const sv::fs::path& d) {
      if (p.empty()) p = d;
    };
    fill(args.inputs.catalog, defaults.catalog);
    fill(args.inputs.ngrams, defaults.ngrams);
    fill(args.inputs.lexicon, defaults.lexicon);
    fill(args.inputs.rules, defaults.rules);
    fill(args.inputs.filter, defaults.filter);
    fill(args.inputs.pictomap, defaults.pictomap);
  }
  for (const auto* p : {&args.inputs.catalog, &args.inputs.ngrams, &args.inputs.lexicon, &args.inputs.rules,
                        &args.inputs.filter, &args.inputs.pictomap}) {
    if (p->empty()) {
      std::cerr << "error: every input file must be given (or use --inputs DIR)\n";
      return kInputError;
    }
  }
  const auto dir = resolve_workspace(args.workspace);
  const auto report = sv::ingest_workspace(args.inputs, dir);
  for (const auto& w : report.warnings) std::cerr << "warning: " << w << '\n';
  std::cout << "workspace: " << dir.string() << '\n'
            << "products: " << report.products << '\n'
            << "categories: " << report.categories << '\n'
            << "ngrams: " << report.ngram_records << '\n'
            << "vocabulary: " << report.vocabulary << '\n'
            << "verbs: " << report.verbs << '\n'
            << "pictograph_links: " << report.pictograph_links << '\n';
  return kOk;
}

struct DescribeArgs {
  std::string key;
  std::string workspace;
  int level = 3;
  std::string format = "json";
  std::string images = "stub";
};

int run_describe(const DescribeArgs& args) {
  const auto provider = sv::make_image_provider(args.images);
  const auto ws = sv::Workspace::load(resolve_workspace(args.workspace));
  sv::Description d;
  try {
    d = sv::describe(ws, args.key, *provider);
  } catch (const sv::Error& e) {
    if (e.code() != sv::Errc::NoVerbFound) throw;
    const auto& record = sv::lookup(ws.catalog, args.key);
    const auto object = sv::object_type(ws.tree, record);
    nlohmann::ordered_json diag;
    diag["error"] = "NoVerbFound";
    diag["product"] = record.upc;
    diag["category"] = ws.tree.name(object);
    diag["fallback_rungs_used"] = {"object+parents+neighbors", "object+parents", "object", "heuristic"};
    diag["message"] = e.what();
    std::cerr << diag.dump(2) << '\n';
    return kGenerationFailure;
  }
  if (args.format == "text") {
    std::cout << sv::to_text(d, args.level);
  } else {
    auto out = sv::to_json(ws, d);
    out["level"] = args.level;
    out["text"] = sv::render(d.generation.message, args.level);
    std::cout << out.dump(2) << '\n';
  }
  return kOk;
}

struct EvalArgs {
  std::string a;
  std::string b;
  std::string format = "text";
};

sv::MOSSummary summarize(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw sv::Error(sv::Errc::Io, "cannot open " + path);
  return sv::mos_summary(sv::ScoreTable::parse(in, path));
}

int run_eval(const EvalArgs& args) {
  const auto a = summarize(args.a);
  const auto b = summarize(args.b);
  const auto [xs, ys] = sv::paired_means(a, b);
  const auto test = sv::paired_t_test(xs, ys);

  if (args.format == "json") {
    nlohmann::ordered_json out;
    auto summary = [](const sv::MOSSummary& s) {
      nlohmann::ordered_json j;
      j["products"] = s.product_means.size();
      j["mean"] = s.grand_mean;
      j["stdev"] = s.stdev;
      j["min"] = s.min;
      j["max"] = s.max;
      return j;
    };
    out["a"] = summary(a);
    out["b"] = summary(b);
    if (const auto* r = std::get_if<sv::TTestResult>(&test)) {
      out["t_test"] = {{"status", "ok"}, {"t", r->t}, {"p", r->p}, {"df", r->df}};
    } else {
      const auto& dv = std::get<sv::DegenerateVariance>(test);
      out["t_test"] = {{"status", "DegenerateVariance"}, {"mean_difference", dv.mean_difference}, {"df", dv.df}};
    }
    std::cout << out.dump(2) << '\n';
    return kOk;
  }

  auto print = [](const char* label, const std::string& path, const sv::MOSSummary& s) {
    std::cout << label << ": " << path << "\n  products: " << s.product_means.size()
              << "\n  mean: " << shortest(s.grand_mean) << "\n  stdev: " << shortest(s.stdev)
              << "\n  min: " << shortest(s.min) << "\n  max: " << shortest(s.max) << '\n';
  };
  print("A", args.a, a);
  print("B", args.b, b);
  if (const auto* r = std::get_if<sv::TTestResult>(&test)) {
    std::cout << "paired t-test: t = " << shortest(r->t) << ", df = " << r->df << ", p = " << shortest(r->p)
              << '\n';
  } else {
    const auto& dv = std::get<sv::DegenerateVariance>(test);
    std::cout << "paired t-test: DegenerateVariance (every paired difference equals "
              << shortest(dv.mean_difference) << "), df = " << dv.df << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Key-message and pictograph generation for product descriptions"};
  app.require_subcommand(1);

  IngestArgs ingest;
  auto* ingest_cmd = app.add_subcommand("ingest", "Validate inputs and write a workspace");
  ingest_cmd->add_option("--catalog", ingest.inputs.catalog, "Product catalog (upc, title, path, url)");
  ingest_cmd->add_option("--ngrams", ingest.inputs.ngrams, "N-gram counts (tokens<TAB>count)");
  ingest_cmd->add_option("--lexicon", ingest.inputs.lexicon, "Verb/pronoun lexicon");
  ingest_cmd->add_option("--rules", ingest.inputs.rules, "Heuristic rules");
  ingest_cmd->add_option("--filter", ingest.inputs.filter, "Restricted verb list");
  ingest_cmd->add_option("--pictomap", ingest.inputs.pictomap, "Pictograph links and synonyms");
  ingest_cmd->add_option("--inputs", ingest.inputs_dir, "Directory holding all inputs under workspace file names");
  ingest_cmd->add_option("-w,--workspace", ingest.workspace, "Workspace directory");

  DescribeArgs describe;
  auto* describe_cmd = app.add_subcommand("describe", "Describe a product by UPC or title");
  describe_cmd->add_option("key", describe.key, "UPC or product title")->required();
  describe_cmd->add_option("-w,--workspace", describe.workspace, "Workspace directory");
  describe_cmd->add_option("--level", describe.level, "Reading level")->check(CLI::Range(1, 3));
  describe_cmd->add_option("--format", describe.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  describe_cmd->add_option("--images", describe.images, "Image provider");

  EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "Compare two opinion-score files");
  eval_cmd->add_option("a", eval.a, "Score file A")->required();
  eval_cmd->add_option("b", eval.b, "Score file B")->required();
  eval_cmd->add_option("--format", eval.format, "Output format")->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*ingest_cmd) return run_ingest(ingest);
    if (*describe_cmd) return run_describe(describe);
    if (*eval_cmd) return run_eval(eval);
  } catch (const sv::Error& e) {
    std::cerr << "error: " << sv::to_string(e.code()) << ": " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

// Copyright 2026 The tcnet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "tcnet/blob_tree.hpp"
#include "tcnet/blobs.hpp"
#include "tcnet/error.hpp"
#include "tcnet/isomorphism.hpp"
#include "tcnet/mlls.hpp"
#include "tcnet/newick.hpp"
#include "tcnet/reconstruct.hpp"
#include "tcnet/report.hpp"
#include "tcnet/shapes.hpp"
#include "tcnet/testkit/generator.hpp"

namespace tcnet::cli {

namespace {

// Raised for problems with files and arguments found after parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::vector<std::string> inputs;
  std::string output;
  std::string format = "enewick";
  std::string pair;
  std::string trace;
  bool no_verify = false;
  bool three = false;
  bool from_mlls = false;
  std::size_t blobs = 0;
  std::size_t leaves = 0;
  std::size_t level = 0;
  std::size_t count = 1;
  std::size_t max_reticulations = 0;
  std::uint64_t seed = 0;
};

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<Network> read_networks(const std::string& path) { return parse_newick_lines(read_text(path)); }

Network read_one(const std::string& path) {
  auto ns = read_networks(path);
  if (ns.size() != 1)
    throw UsageError(path + " holds " + std::to_string(ns.size()) + " networks; expected exactly one");
  return std::move(ns.front());
}

void emit(const Config& cfg, const std::string& text, std::ostream& out) {
  if (cfg.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.output);
  if (!f) throw UsageError("cannot write " + cfg.output);
  f << text;
}

std::string format_networks(const Config& cfg, const std::vector<Network>& ns) {
  if (cfg.format == "json") return networks_to_json(ns) + "\n";
  std::string text;
  for (const Network& n : ns) text += to_newick(n) + "\n";
  return text;
}

int cmd_validate(const Config& cfg, std::ostream& out) {
  bool all_ok = true;
  for (const std::string& path : cfg.inputs) {
    std::istringstream lines(read_text(path));
    std::string line;
    std::size_t number = 0;
    while (std::getline(lines, line)) {
      ++number;
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      out << path << ":" << number << ": ";
      try {
        Network n = parse_newick(line);
        out << "ok, " << n.leaf_count() << " leaves, " << n.reticulation_count() << " reticulations, level "
            << level(n) << ", " << (is_tree_child(n) ? "tree-child" : "not tree-child") << "\n";
      } catch (const Error& e) {
        all_ok = false;
        out << e.what() << "\n";
      }
    }
  }
  return all_ok ? 0 : 1;
}

int cmd_mlls(const Config& cfg, std::ostream& out) {
  emit(cfg, format_networks(cfg, enumerate_mlls(read_one(cfg.inputs.front())).networks), out);
  return 0;
}

int cmd_blobtree(const Config& cfg, std::ostream& out) {
  BlobTree tree = cfg.from_mlls ? reconstruct_blob_tree(read_networks(cfg.inputs.front()))
                                : blob_tree(read_one(cfg.inputs.front()));
  emit(cfg, blob_tree_to_json(tree) + "\n", out);
  return 0;
}

int cmd_shapes(const Config& cfg, std::ostream& out) {
  auto comma = cfg.pair.find(',');
  if (comma == std::string::npos) throw UsageError("--pair expects two taxa as x,y");
  std::string x = cfg.pair.substr(0, comma);
  std::string y = cfg.pair.substr(comma + 1);
  auto ns = read_networks(cfg.inputs.front());
  if (ns.empty()) throw UsageError(cfg.inputs.front() + " holds no networks");
  std::ostringstream text;
  if (ns.size() == 1) {
    text << to_string(classify_pair(ns.front(), x, y)) << "\n";
  } else {
    ShapeProfile p = shape_profile(ns, x, y);
    text << "profile:";
    for (ShapeKind k : kAllShapeKinds)
      if (p[static_cast<std::size_t>(k)] > 0) text << " " << to_string(k) << "=" << p[static_cast<std::size_t>(k)];
    text << "\ninferred: " << to_string(infer_shape(ns, x, y)) << "\n";
  }
  emit(cfg, text.str(), out);
  return 0;
}

int cmd_reconstruct(const Config& cfg, std::ostream& out) {
  auto ns = read_networks(cfg.inputs.front());
  ReconstructOptions options{!cfg.no_verify};
  Reconstruction r = cfg.three ? reconstruct_from_three(ns, cfg.blobs, options) : tcmlls_reconstruct(ns, options);
  emit(cfg, format_networks(cfg, {r.network}), out);
  if (!cfg.trace.empty()) {
    std::ofstream f(cfg.trace);
    if (!f) throw UsageError("cannot write " + cfg.trace);
    f << trace_to_json(r) << "\n";
  }
  return 0;
}

int cmd_iso(const Config& cfg, std::ostream& out) {
  Network a = read_one(cfg.inputs[0]);
  Network b = read_one(cfg.inputs[1]);
  emit(cfg, is_isomorphic(a, b) ? "isomorphic\n" : "non-isomorphic\n", out);
  return 0;
}

int cmd_generate(const Config& cfg, std::ostream& out) {
  std::vector<Network> ns;
  for (std::size_t i = 0; i < cfg.count; ++i) {
    testkit::GenSpec spec;
    spec.n_leaves = cfg.leaves;
    spec.target_level = cfg.level;
    spec.n_level_k_blobs = cfg.blobs == 0 ? 1 : cfg.blobs;
    spec.seed = cfg.seed + i;
    if (cfg.max_reticulations > 0) spec.max_reticulations = cfg.max_reticulations;
    ns.push_back(testkit::random_tree_child(spec));
  }
  emit(cfg, format_networks(cfg, ns), out);
  return 0;
}

void add_format(CLI::App* sub, Config& cfg) {
  sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"enewick", "json"}));
}

void add_output(CLI::App* sub, Config& cfg) { sub->add_option("-o,--output", cfg.output, "Output file (default stdout)"); }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Tree-child network reconstruction from maximum lower-level subnetworks", "tcnet"};
  app.require_subcommand(1);

  auto* validate = app.add_subcommand("validate", "Check every network in the files");
  validate->add_option("files", cfg.inputs, "eNewick files")->required()->check(CLI::ExistingFile);

  auto* mlls = app.add_subcommand("mlls", "Write the maximum lower-level subnetworks of a network");
  mlls->add_option("file", cfg.inputs, "eNewick file with one network")->required()->check(CLI::ExistingFile);
  add_output(mlls, cfg);
  add_format(mlls, cfg);

  auto* blobtree = app.add_subcommand("blobtree", "Write the blob tree as JSON");
  blobtree->add_option("file", cfg.inputs, "eNewick file")->required()->check(CLI::ExistingFile);
  blobtree->add_flag("--from-mlls", cfg.from_mlls, "Rebuild the blob tree from a file of MLLSs");
  add_output(blobtree, cfg);

  auto* shapes = app.add_subcommand("shapes", "Classify a leaf pair, or infer it from several networks");
  shapes->add_option("file", cfg.inputs, "eNewick file")->required()->check(CLI::ExistingFile);
  shapes->add_option("--pair", cfg.pair, "Leaf pair as x,y")->required();
  add_output(shapes, cfg);

  auto* reconstruct = app.add_subcommand("reconstruct", "Rebuild a network from its MLLSs");
  reconstruct->add_option("file", cfg.inputs, "eNewick file of MLLSs")->required()->check(CLI::ExistingFile);
  reconstruct->add_flag("--no-verify", cfg.no_verify, "Skip the final comparison with the input");
  auto* three = reconstruct->add_flag("--three", cfg.three, "Three-MLLS mode; needs --blobs");
  reconstruct->add_option("--blobs", cfg.blobs, "Number of top-level blobs")->needs(three)->check(CLI::PositiveNumber);
  reconstruct->add_option("--trace", cfg.trace, "Write the JSON trace to this file");
  add_output(reconstruct, cfg);
  add_format(reconstruct, cfg);

  auto* iso = app.add_subcommand("iso", "Compare the networks in two files");
  iso->add_option("files", cfg.inputs, "Two eNewick files")->required()->expected(2)->check(CLI::ExistingFile);

  auto* generate = app.add_subcommand("generate", "Write random tree-child networks");
  generate->add_option("--leaves", cfg.leaves, "Number of leaves")->required()->check(CLI::PositiveNumber);
  generate->add_option("--level", cfg.level, "Network level");
  generate->add_option("--blobs", cfg.blobs, "Blobs of that level (default 1)");
  generate->add_option("--seed", cfg.seed, "Seed of the first network");
  generate->add_option("--count", cfg.count, "Number of networks; seeds run upwards")->check(CLI::PositiveNumber);
  generate->add_option("--max-reticulations", cfg.max_reticulations, "Cap on reticulations");
  add_output(generate, cfg);
  add_format(generate, cfg);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  if (three->count() > 0 && cfg.blobs == 0) {
    err << "error: --three needs --blobs\n";
    return 2;
  }

  try {
    if (*validate) return cmd_validate(cfg, out);
    if (*mlls) return cmd_mlls(cfg, out);
    if (*blobtree) return cmd_blobtree(cfg, out);
    if (*shapes) return cmd_shapes(cfg, out);
    if (*reconstruct) return cmd_reconstruct(cfg, out);
    if (*iso) return cmd_iso(cfg, out);
    if (*generate) return cmd_generate(cfg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace tcnet::cli

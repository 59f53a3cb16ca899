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

#include "tcnet/newick.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>

#include "tcnet/error.hpp"
#include "tcnet/isomorphism.hpp"

namespace tcnet {

namespace {

constexpr std::string_view kDelimiters = "(),;:#[]'";

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

struct ParsedNode {
  std::vector<std::unique_ptr<ParsedNode>> children;
  bool has_children = false;
  std::string name;
  std::optional<std::string> hybrid;
  std::size_t position = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  std::unique_ptr<ParsedNode> parse() {
    skip_space();
    auto top = node();
    skip_space();
    expect(';');
    skip_space();
    if (pos_ != text_.size()) fail("unexpected text after ';'");
    return top;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(Errc::SyntaxError, "at position " + std::to_string(pos_) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::unique_ptr<ParsedNode> node() {
    auto out = std::make_unique<ParsedNode>();
    out->position = pos_;
    if (peek('(')) {
      ++pos_;
      out->has_children = true;
      out->children.push_back(node());
      while (peek(',')) {
        ++pos_;
        out->children.push_back(node());
      }
      expect(')');
    }
    out->name = label();
    if (peek('#')) {
      ++pos_;
      std::string tag = bare_word();
      if (tag.empty()) fail("empty hybrid tag");
      out->hybrid = tag;
    }
    if (peek(':')) fail("branch lengths are not supported");
    if (peek('[')) fail("comments are not supported");
    if (!out->has_children && !out->hybrid && out->name.empty()) fail("empty leaf label");
    return out;
  }

  std::string bare_word() {
    std::string out;
    while (pos_ < text_.size() && !is_space(text_[pos_]) &&
           kDelimiters.find(text_[pos_]) == std::string_view::npos)
      out += text_[pos_++];
    return out;
  }

  std::string label() {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '\'') {
      ++pos_;
      std::string out;
      while (true) {
        if (pos_ >= text_.size()) fail("unterminated quoted label");
        char c = text_[pos_++];
        if (c == '\'') {
          if (pos_ < text_.size() && text_[pos_] == '\'') {
            out += '\'';
            ++pos_;
            continue;
          }
          break;
        }
        out += c;
      }
      if (out.empty()) fail("empty quoted label");
      return out;
    }
    return bare_word();
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

struct Builder {
  Graph g;
  struct Hybrid {
    NodeId node = 0;
    std::size_t occurrences = 0;
    bool defined = false;
  };
  std::map<std::string, Hybrid> hybrids;

  NodeId hybrid_node(const std::string& tag) {
    auto [it, inserted] = hybrids.try_emplace(tag);
    if (inserted) it->second.node = g.add_node();
    ++it->second.occurrences;
    return it->second.node;
  }

  NodeId build(const ParsedNode& p) {
    NodeId v;
    if (p.hybrid) {
      v = hybrid_node(*p.hybrid);
      Hybrid& h = hybrids.at(*p.hybrid);
      bool defines = p.has_children || !p.name.empty();
      if (!defines) return v;
      if (h.defined)
        throw Error(Errc::SyntaxError, "at position " + std::to_string(p.position) + ": hybrid #" +
                                           *p.hybrid + " is given children twice");
      h.defined = true;
      if (!p.has_children) {
        g.add_edge(v, g.add_node(p.name));
        return v;
      }
    } else {
      v = g.add_node(p.has_children ? std::string{} : p.name);
    }
    for (const auto& c : p.children) g.add_edge(v, build(*c));
    return v;
  }
};

bool needs_quotes(const std::string& label) {
  if (label.empty()) return true;
  return std::any_of(label.begin(), label.end(), [](char c) {
    return is_space(c) || kDelimiters.find(c) != std::string_view::npos || c == '{' || c == '}';
  });
}

std::string quote(const std::string& label) {
  if (!needs_quotes(label)) return label;
  std::string out = "'";
  for (char c : label) {
    if (c == '\'') out += '\'';
    out += c;
  }
  out += '\'';
  return out;
}

class Writer {
 public:
  explicit Writer(const Network& n) : n_(n), mu_(mu_vectors(n)), tag_(n.id_bound(), 0) {}

  std::string run() {
    write(n_.children(n_.root()).front());
    out_ += ';';
    return out_;
  }

 private:
  void write(NodeId v) {
    if (n_.is_reticulation(v)) {
      if (tag_[v] != 0) {
        out_ += "#H" + std::to_string(tag_[v]);
        return;
      }
      tag_[v] = ++next_tag_;
    }
    if (n_.is_leaf(v)) {
      out_ += quote(n_.label(v));
      return;
    }
    std::vector<NodeId> ch = n_.children(v);
    std::stable_sort(ch.begin(), ch.end(), [&](NodeId a, NodeId b) {
      return std::lexicographical_compare(mu_[b].begin(), mu_[b].end(), mu_[a].begin(), mu_[a].end());
    });
    out_ += '(';
    for (std::size_t i = 0; i < ch.size(); ++i) {
      if (i) out_ += ',';
      write(ch[i]);
    }
    out_ += ')';
    if (n_.is_reticulation(v)) out_ += "#H" + std::to_string(tag_[v]);
  }

  const Network& n_;
  std::vector<MuVector> mu_;
  std::vector<int> tag_;
  int next_tag_ = 0;
  std::string out_;
};

}  // namespace

Network parse_newick(std::string_view text) {
  auto top = Parser(text).parse();
  Builder b;
  NodeId top_node = b.build(*top);
  for (const auto& [tag, h] : b.hybrids)
    if (h.occurrences < 2)
      throw Error(Errc::DanglingHybridLabel, "hybrid #" + tag + " occurs only once");
  if (b.g.indegree(top_node) != 0 || b.g.outdegree(top_node) != 1) {
    NodeId root = b.g.add_node();
    b.g.add_edge(root, top_node);
  }
  if (auto diag = Network::diagnose(b.g))
    throw Error(Errc::ValidationError, std::string(to_string(diag->code)) + ": " + diag->message);
  return Network(std::move(b.g));
}

std::vector<Network> parse_newick_lines(std::string_view text) {
  std::vector<Network> out;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    if (line.find_first_not_of(" \t\r") != std::string_view::npos) {
      try {
        out.push_back(parse_newick(line));
      } catch (const Error& e) {
        throw Error(e.code(), "line " + std::to_string(line_no) + ": " + e.detail());
      }
    }
    start = end + 1;
  }
  return out;
}

std::string to_newick(const Network& n) { return Writer(n).run(); }

std::vector<Network> read_newick_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_newick_lines(buffer.str());
}

void write_newick_file(const std::filesystem::path& path, const std::vector<Network>& networks) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  for (const Network& n : networks) out << to_newick(n) << '\n';
}

}  // namespace tcnet

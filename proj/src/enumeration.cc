// Copyright 2026 The cyclebound Authors
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


#include "cyclebound/enumeration.h"

#include <algorithm>
#include <array>
#include <functional>
#include <mutex>
#include <unordered_set>
#include <utility>

#include "cyclebound/parallel.h"

namespace cyclebound {
namespace {

constexpr std::size_t kShards = 64;

// Insert-if-absent set split into independently locked shards.
class ShardedSet {
 public:
  void insert(std::string key) {
    Shard& shard = shards_[std::hash<std::string>{}(key) % kShards];
    std::lock_guard lock(shard.mutex);
    shard.keys.insert(std::move(key));
  }

  std::vector<std::string> sorted() {
    std::vector<std::string> out;
    std::size_t total = 0;
    for (auto& shard : shards_) total += shard.keys.size();
    out.reserve(total);
    for (auto& shard : shards_) {
      for (auto it = shard.keys.begin(); it != shard.keys.end();) {
        out.push_back(std::move(shard.keys.extract(it++).value()));
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  struct Shard {
    std::mutex mutex;
    std::unordered_set<std::string> keys;
  };
  std::array<Shard, kShards> shards_;
};

std::vector<std::uint64_t> rows_of(const Graph& g) {
  std::vector<std::uint64_t> rows(g.order());
  for (Vertex v = 0; v < g.order(); ++v) rows[v] = g.row(v)[0];
  return rows;
}

void check_order(std::size_t n) {
  if (n < 1 || n > kMaxEnumerationOrder) {
    throw InvalidArgument("connected graph enumeration supports 1 <= n <= " +
                          std::to_string(kMaxEnumerationOrder) + ", got n = " +
                          std::to_string(n));
  }
}

}  // namespace

std::vector<std::string> extend_level(const std::vector<std::string>& parents,
                                      std::size_t workers) {
  if (parents.empty()) return {};
  const std::size_t n = parse_graph6(parents.front()).order();
  if (n + 1 > kMaxGraph6Order) throw InvalidArgument("level too large to extend");
  const std::uint64_t subsets = std::uint64_t{1} << n;

  ShardedSet seen;
  parallel_for(parents.size(), workers, [&](std::size_t i) {
    const Graph parent = parse_graph6(parents[i]);
    std::vector<std::uint64_t> rows = rows_of(parent);
    rows.push_back(0);
    const std::vector<std::uint64_t> base = rows;
    const std::uint64_t fresh = std::uint64_t{1} << n;
    for (std::uint64_t s = 1; s < subsets; ++s) {
      for (std::size_t v = 0; v < n; ++v) {
        rows[v] = (s >> v) & 1 ? base[v] | fresh : base[v];
      }
      rows[n] = s;
      seen.insert(canonical_form(rows));
    }
  });
  return seen.sorted();
}

std::vector<std::string> connected_graph6(std::size_t n, std::size_t workers) {
  check_order(n);
  std::vector<std::string> level{to_graph6(Graph::from_edges(1, {}))};
  for (std::size_t k = 1; k < n; ++k) level = extend_level(level, workers);
  return level;
}

struct GraphStream::Source {
  virtual ~Source() = default;
  virtual std::optional<Record> next() = 0;
};

namespace {

class LinesSource : public GraphStream::Source {
 public:
  explicit LinesSource(std::vector<std::string> lines) : lines_(std::move(lines)) {}

  std::optional<GraphStream::Record> next() override {
    if (index_ == lines_.size()) return std::nullopt;
    std::string& text = lines_[index_++];
    Graph g = parse_graph6(text);
    return GraphStream::Record{std::move(g), std::move(text), index_};
  }

 private:
  std::vector<std::string> lines_;
  std::size_t index_ = 0;
};

// Builds one level at a time; only the current level is held in memory.
class GeneratedSource : public GraphStream::Source {
 public:
  GeneratedSource(std::size_t n_min, std::size_t n_max, std::size_t workers)
      : n_max_(n_max), workers_(workers) {
    check_order(n_max);
    if (n_min < 1 || n_min > n_max) throw InvalidArgument("empty or invalid order range");
    order_ = n_min;
    level_ = connected_graph6(n_min, workers);
  }

  std::optional<GraphStream::Record> next() override {
    while (index_ == level_.size()) {
      if (order_ == n_max_) return std::nullopt;
      level_ = extend_level(level_, workers_);
      ++order_;
      index_ = 0;
    }
    const std::string& text = level_[index_++];
    return GraphStream::Record{parse_graph6(text), text, 0};
  }

 private:
  std::size_t n_max_;
  std::size_t workers_;
  std::size_t order_ = 1;
  std::vector<std::string> level_;
  std::size_t index_ = 0;
};

class FileSource : public GraphStream::Source {
 public:
  explicit FileSource(const std::string& path) : in_(path), path_(path) {
    if (!in_) throw Error("cannot open graph6 file '" + path + "'");
  }

  std::optional<GraphStream::Record> next() override {
    std::string text;
    if (!std::getline(in_, text)) {
      if (in_.bad()) throw Error("read failure on '" + path_ + "'");
      return std::nullopt;
    }
    ++line_;
    try {
      Graph g = parse_graph6(text);
      if (!text.empty() && text.back() == '\r') text.pop_back();
      if (text.starts_with(">>graph6<<")) text.erase(0, 10);
      return GraphStream::Record{std::move(g), std::move(text), line_};
    } catch (const ParseError& e) {
      throw ParseError(path_ + ":" + std::to_string(line_) + ": " + e.what(), e.offset(),
                       line_);
    }
  }

 private:
  std::ifstream in_;
  std::string path_;
  std::size_t line_ = 0;
};

}  // namespace

GraphStream::GraphStream(std::unique_ptr<Source> source, Provenance provenance)
    : source_(std::move(source)), provenance_(provenance) {}
GraphStream::GraphStream(GraphStream&&) noexcept = default;
GraphStream& GraphStream::operator=(GraphStream&&) noexcept = default;
GraphStream::~GraphStream() = default;

std::optional<GraphStream::Record> GraphStream::next() {
  auto record = source_->next();
  if (record) ++count_;
  return record;
}

GraphStream GraphStream::generated(std::size_t n_min, std::size_t n_max,
                                   std::size_t workers) {
  return GraphStream(std::make_unique<GeneratedSource>(n_min, n_max, workers),
                     Provenance::kGenerated);
}

GraphStream GraphStream::from_lines(std::vector<std::string> lines, Provenance provenance) {
  return GraphStream(std::make_unique<LinesSource>(std::move(lines)), provenance);
}

GraphStream GraphStream::from_file(const std::string& path) {
  return GraphStream(std::make_unique<FileSource>(path), Provenance::kFile);
}

GraphStream enumerate_connected(std::size_t n, std::size_t workers) {
  return GraphStream::generated(n, n, workers);
}

GraphStream read_graph6_stream(const std::string& path) {
  return GraphStream::from_file(path);
}

}  // namespace cyclebound

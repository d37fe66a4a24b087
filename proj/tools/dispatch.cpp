// Copyright 2026 The roelcke Authors
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

#include "dispatch.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "roelcke/constructions.hpp"
#include "roelcke/document.hpp"
#include "roelcke/error.hpp"

namespace roelcke::cli {

namespace {

using cantor::ClopenSet;
using cantor::Partition;
using finrel::IndexRelation;
using homeo::PrefixMap;
using towers::RelationTower;

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw ValidationError("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

std::string join_documents(const std::vector<std::string>& docs) {
  std::string out;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    if (i > 0) out += '\n';
    out += docs[i];
  }
  return out;
}

struct PartitionChoice {
  std::optional<std::size_t> level;
  std::string file;
};

// Every option and positional the subcommands bind to.
struct Params {
  std::vector<std::string> files;
  std::string out_file;
  std::size_t size = 0;
  std::optional<std::size_t> cap;
  std::optional<std::size_t> budget;
  std::optional<std::size_t> level;
  std::string side = "left";
  bool count_only = false;
  bool approximate = false;
  PartitionChoice partition;
};

class Commands {
 public:
  Commands(CLI::App& app, Params& p, std::istream& in, std::ostream& err)
      : app_(app), p_(p), in_(in), err_(err) {}

  std::function<std::string()> action;

  void build() {
    app_.add_option("--out", p_.out_file, "write the output document to this file");
    app_.require_subcommand(1);
    build_rel();
    build_homeo();
    build_tower();
    build_constructions();
  }

 private:
  template <typename T>
  T load(std::size_t i) const {
    return parse_value<T>(read_input(p_.files.at(i), in_));
  }

  Partition partition() const {
    if (!p_.partition.file.empty()) return load_partition(p_.partition.file);
    if (p_.partition.level) return Partition::level(*p_.partition.level);
    throw ValidationError("one of --level or --partition is required");
  }
  Partition load_partition(const std::string& path) const {
    return parse_value<Partition>(read_input(path, in_));
  }
  std::size_t level() const {
    if (!p_.level) throw ValidationError("--level is required");
    return *p_.level;
  }

  CLI::App* command(CLI::App* parent, const std::string& name, const std::string& help,
                    std::size_t files, std::function<std::string()> fn) {
    auto* sub = parent->add_subcommand(name, help);
    if (files > 0) {
      sub->add_option("files", p_.files, "input documents")
          ->expected(static_cast<int>(files))
          ->required();
    }
    sub->callback([this, fn = std::move(fn)] { action = fn; });
    return sub;
  }

  void partition_options(CLI::App* sub) {
    auto* level = sub->add_option("--level", p_.partition.level, "canonical level-n partition");
    auto* file = sub->add_option("--partition", p_.partition.file, "partition document");
    level->excludes(file);
  }

  void build_rel() {
    auto* rel = app_.add_subcommand("rel", "relations on finite index sets");
    rel->require_subcommand(1);
    command(rel, "compose", "compose A B: pairs (x,y) with x B z A y", 2, [this] {
      return format(finrel::compose(load<IndexRelation>(0), load<IndexRelation>(1)));
    });
    command(rel, "transpose", "transpose A", 1,
            [this] { return format(finrel::transpose(load<IndexRelation>(0))); });
    command(rel, "classify", "classify A", 1, [this] {
      const auto c = finrel::classify(load<IndexRelation>(0));
      std::ostringstream out;
      out << "classification\n"
          << "e0 " << yes_no(c.is_e0) << '\n'
          << "symmetric " << yes_no(c.is_symmetric) << '\n'
          << "diagonal " << yes_no(c.contains_diagonal) << '\n'
          << "idempotent " << yes_no(c.is_idempotent) << '\n'
          << "equivalence " << yes_no(c.is_equivalence) << '\n';
      return out.str();
    });
    auto* en = command(rel, "enum", "all relations with full domain and range", 0, [this] {
      auto all = finrel::enumerate_e0(p_.size, p_.cap.value_or(finrel::kDefaultEnumerationCap));
      if (p_.count_only) return std::to_string(all.size()) + "\n";
      return format(all);
    });
    en->add_option("--size", p_.size, "index set size")->required();
    en->add_option("--cap", p_.cap, "largest admissible size");
    en->add_flag("--count-only", p_.count_only, "print only the number of relations");
    auto* cl = command(rel, "closure", "subsemigroup generated by a relation set", 1, [this] {
      auto gens = load<RelationSet>(0);
      return format(finrel::closure(gens, p_.cap.value_or(finrel::kDefaultClosureCap)));
    });
    cl->add_option("--cap", p_.cap, "largest admissible closure size");
    command(rel, "greatest-idem", "greatest member above the diagonal of a closed set", 1,
            [this] {
              auto set = load<RelationSet>(0);
              auto top = finrel::greatest_delta_element(set);
              return top ? format(*top) : std::string("none\n");
            });
    auto* inv = command(rel, "invariants", "relations fixed by every relabelling", 0, [this] {
      return format(finrel::invariant_under_symmetric_group(
          p_.size, p_.cap.value_or(finrel::kDefaultEnumerationCap)));
    });
    inv->add_option("--size", p_.size, "index set size")->required();
    inv->add_option("--cap", p_.cap, "largest admissible size");
  }

  void build_homeo() {
    auto* h = app_.add_subcommand("homeo", "prefix-exchange homeomorphisms");
    h->require_subcommand(1);
    command(h, "compose", "compose F G: x -> F(G(x))", 2, [this] {
      return format(homeo::compose(load<PrefixMap>(0), load<PrefixMap>(1)));
    });
    command(h, "invert", "invert F", 1,
            [this] { return format(homeo::invert(load<PrefixMap>(0))); });
    partition_options(command(h, "trace", "trace F on a partition", 1, [this] {
      return format(homeo::trace(load<PrefixMap>(0), partition()));
    }));
    command(h, "image", "image F C of a clopen set", 2, [this] {
      return format(homeo::image_clopen(load<PrefixMap>(0), load<ClopenSet>(1)));
    });
    partition_options(command(h, "stab", "does F preserve every block", 1, [this] {
      return std::string(yes_no(homeo::in_stabilizer(load<PrefixMap>(0), partition()))) + "\n";
    }));
    command(h, "supdist", "sup distance between F and G", 2, [this] {
      return homeo::sup_distance(load<PrefixMap>(0), load<PrefixMap>(1)).str() + "\n";
    });
    command(h, "mapclopen", "rules carrying clopen P onto clopen Q", 2, [this] {
      const auto rules = homeo::map_clopen(load<ClopenSet>(0), load<ClopenSet>(1));
      std::string out = "pieces\n";
      for (const auto& r : rules) out += r.domain.str() + " -> " + r.range.str() + "\n";
      return out;
    });
  }

  towers::Side side() const {
    if (p_.side == "left") return towers::Side::left;
    if (p_.side == "right") return towers::Side::right;
    throw ValidationError("--side must be 'left' or 'right'");
  }

  std::string tower_output(const RelationTower& t) const {
    if (!t.exact()) {
      err_ << "note: approximate tower; printed trace is a superset at level "
           << t.budget().value_or(towers::kMaxLevel) << "\n";
    }
    return format(t);
  }

  void build_tower() {
    auto* t = app_.add_subcommand("tower", "closed relations as trace towers");
    t->require_subcommand(1);
    partition_options(command(t, "trace", "trace of T on a partition", 1, [this] {
      return format(towers::trace_at(load<RelationTower>(0), partition()));
    }));
    command(t, "involute", "transpose of T", 1,
            [this] { return tower_output(towers::involute(load<RelationTower>(0))); });
    auto* comp = command(t, "compose", "product T1 T2 (T2 acts first)", 2, [this] {
      const auto budget = p_.budget.value_or(towers::kMaxLevel);
      auto lhs = load<RelationTower>(0);
      auto rhs = load<RelationTower>(1);
      return tower_output(p_.approximate ? towers::approximate_product(lhs, rhs, budget)
                                         : towers::product(lhs, rhs, budget));
    });
    comp->add_option("--budget", p_.budget, "level for approximate products");
    comp->add_flag("--approximate", p_.approximate,
                   "always compose traces at the budget level, even when an exact product exists");
    auto* tr = command(t, "translate", "translate G T by a homeomorphism", 2, [this] {
      return tower_output(towers::translate(load<PrefixMap>(0), load<RelationTower>(1), side()));
    });
    tr->add_option("--side", p_.side, "left (G.T) or right (T.G)");
    partition_options(command(t, "same-nbhd", "same basic neighbourhood at a partition", 2,
                              [this] {
                                return std::string(yes_no(towers::same_neighborhood(
                                           load<RelationTower>(0), load<RelationTower>(1),
                                           partition()))) +
                                       "\n";
                              }));
    auto* hd = command(t, "hausdorff", "Hausdorff distance bounds at a level", 2, [this] {
      auto b = towers::hausdorff_bounds(load<RelationTower>(0), load<RelationTower>(1), level());
      return "lower " + b.lower.str() + "\nupper " + b.upper.str() + "\n";
    });
    hd->add_option("--level", p_.level, "trace level")->required();
    auto* ck = command(t, "check", "coherence of the traces up to a level", 1, [this] {
      auto report = towers::check_coherence(load<RelationTower>(0), level());
      if (report.ok) return std::string("coherent\n");
      throw ValidationError("incoherent at level " + std::to_string(*report.failed_level) +
                            ": " + report.reason);
    });
    ck->add_option("--level", p_.level, "highest level checked")->required();
  }

  void build_constructions() {
    partition_options(command(&app_, "realize", "homeomorphism with trace R", 1, [this] {
      return format(constructions::realize(partition(), load<IndexRelation>(0)));
    }));
    partition_options(command(&app_, "realize-pair", "f, g with traces R, S and f.g with RS", 2,
                              [this] {
                                auto [f, g] = constructions::joint_realize(
                                    partition(), load<IndexRelation>(0), load<IndexRelation>(1));
                                return join_documents({format(f), format(g)});
                              }));
    partition_options(command(&app_, "coset-witness", "u, v in the stabilizer with F = u^-1 G v",
                              2, [this] {
                                auto cert = constructions::double_coset_witness(
                                    partition(), load<PrefixMap>(0), load<PrefixMap>(1));
                                return join_documents({format(cert.u), format(cert.v)});
                              }));
    auto* net = command(&app_, "net", "one realization per trace", 0, [this] {
      auto all = constructions::roelcke_net(partition(),
                                            p_.cap.value_or(finrel::kDefaultEnumerationCap));
      if (p_.count_only) return std::to_string(all.size()) + "\n";
      std::vector<std::string> docs;
      for (const auto& f : all) docs.push_back(format(f));
      return join_documents(docs);
    });
    partition_options(net);
    net->add_flag("--count-only", p_.count_only, "print only the number of maps");
    net->add_option("--cap", p_.cap, "largest admissible block count");
    auto* cluster = command(&app_, "cluster", "cluster-point certificate for R S", 2, [this] {
      auto cert = constructions::cluster_witness(load<RelationTower>(0), load<RelationTower>(1),
                                                 level());
      std::string head = "cluster\nlevel " + std::to_string(cert.level) + "\nrefinement " +
                         std::to_string(cert.refinement_level) + "\n";
      return join_documents({head, format(cert.f), format(cert.g)});
    });
    cluster->add_option("--level", p_.level, "neighbourhood level of the product")->required();

    auto* witness = app_.add_subcommand("witness", "witnesses for orbit arguments");
    witness->require_subcommand(1);
    command(witness, "dense-orbit", "f with f(U1) in V1 and f(U2) in V2", 4, [this] {
      return format(constructions::dense_orbit_witness(load<ClopenSet>(0), load<ClopenSet>(1),
                                                       load<ClopenSet>(2), load<ClopenSet>(3)));
    });
    command(witness, "conjugation", "h and g = h F h^-1 with g(U) = V", 3, [this] {
      auto w = constructions::conjugation_witness(load<PrefixMap>(0), load<ClopenSet>(1),
                                                  load<ClopenSet>(2));
      return join_documents({format(w.h), format(w.g)});
    });
  }

  CLI::App& app_;
  Params& p_;
  std::istream& in_;
  std::ostream& err_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::istream& in) {
  CLI::App app{"Exact computations with closed relations on the Cantor set", "roelcke"};
  Params params;
  Commands commands(app, params, in, err);
  commands.build();

  std::vector<std::string> argv_storage{"roelcke"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help("", CLI::AppFormatMode::All);
    return kValidation;
  }

  try {
    if (!commands.action) throw ValidationError("no command given");
    const std::string output = commands.action();
    if (params.out_file.empty()) {
      out << output;
    } else {
      std::ofstream file(params.out_file, std::ios::binary);
      if (!file) throw ValidationError("cannot write '" + params.out_file + "'");
      file << output;
    }
    return kSuccess;
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << "\n";
    return kPrecondition;
  } catch (const BudgetError& e) {
    err << "budget exhausted: " << e.what() << "\n";
    return kBudget;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const ValidationError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kValidation;
  } catch (const std::out_of_range& e) {
    err << "invalid input: missing argument\n";
    return kValidation;
  }
}

}  // namespace roelcke::cli

// absorder: construct absolute orders on the A/B/I2 reflection groups, print
// rank data and Hasse diagrams, factorize elements through the standard-flag
// tiers, and certify the strong Sperner property by exact k-family
// optimization with dual chain certificates.
//
// Exit codes: 0 all requested checks pass, 2 usage or parse error, 3 size
// guard exceeded, 4 verification failure (a check or certificate did not
// hold; indicates a bug, never silent).

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "absorder/absolute_order.hpp"
#include "absorder/flag_factorization.hpp"
#include "absorder/sperner.hpp"
#include "json.hpp"

namespace {

using absorder::GradedPoset;
using absorder::GroupId;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;
constexpr int kExitVerification = 4;

long long max_group_guard() {
  const char* env = std::getenv("ABSORDER_MAX_GROUP");
  if (!env) return absorder::kDefaultMaxGroup;
  try {
    long long value = std::stoll(env);
    if (value < 1) throw std::invalid_argument("nonpositive");
    return value;
  } catch (const std::exception&) {
    throw absorder::parse_error("ABSORDER_MAX_GROUP must be a positive integer", 0);
  }
}

class Stopwatch {
 public:
  long long lap_ms() {
    auto now = std::chrono::steady_clock::now();
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(now - last_).count();
    last_ = now;
    return ms;
  }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

int cmd_ranks(const std::string& group) {
  GroupId g = GroupId::parse(group);
  GradedPoset order = build_absolute_order(g, max_group_guard());
  absorder::RankSequence computed = rank_sequence(order);
  absorder::RankSequence expected = absorder::expected_rank_polynomial(g);
  bool match = computed == expected;

  json report;
  report["group"] = g.text();
  report["rank_sequence"] = computed;
  report["expected_rank_sequence"] = expected;
  report["match"] = match;
  std::cout << report.dump(2) << "\n";
  return match ? kExitOk : kExitVerification;
}

int cmd_verify(const std::string& group, bool all_k, int single_k, bool with_certificates,
               bool inject_fault) {
  GroupId g = GroupId::parse(group);
  const long long guard = max_group_guard();
  Stopwatch watch;
  json timings;

  GradedPoset order = build_absolute_order(g, guard);
  absorder::RankSequence computed = rank_sequence(order);
  absorder::RankSequence expected = absorder::expected_rank_polynomial(g);
  bool ranks_match = computed == expected;
  timings["build"] = watch.lap_ms();

  bool factorization_ok = absorder::verify_length_formula(g, guard);
  timings["factorization"] = watch.lap_ms();

  absorder::ClawEmbedding embedding = absorder::embed_claw_product(g, guard);
  bool embedding_ok = is_spanning_subposet(embedding.image, order);
  timings["embedding"] = watch.lap_ms();

  std::vector<int> ks;
  if (all_k)
    for (int k = 1; k <= order.top_rank() + 1; ++k) ks.push_back(k);
  else
    ks.push_back(single_k);

  bool sperner_ok = true;
  json sperner = json::array();
  for (int k : ks) {
    absorder::KFamilyCertificate cert = absorder::max_k_family(order, k);
    if (inject_fault && !cert.family.empty()) {
      cert.family.pop_back();  // break the certificate on purpose
      cert.size -= 1;
    }
    long long prediction = absorder::k_largest_rank_sum(computed, k);
    bool certificate_valid = validate_certificate(order, cert);
    bool k_sperner = certificate_valid && cert.size == prediction;
    sperner_ok = sperner_ok && k_sperner;
    json entry;
    entry["k"] = k;
    entry["max_family_size"] = cert.size;
    entry["k_largest_ranks_sum"] = prediction;
    entry["is_k_sperner"] = k_sperner;
    if (with_certificates) {
      json family = json::array();
      for (int v : cert.family) family.push_back(order.label(v));
      json chains = json::array();
      for (const auto& chain : cert.dual_chains) {
        json labels = json::array();
        for (int v : chain) labels.push_back(order.label(v));
        chains.push_back(labels);
      }
      entry["family"] = family;
      entry["dual_chains"] = chains;
      entry["certificate_valid"] = certificate_valid;
    }
    sperner.push_back(entry);
  }
  timings["sperner"] = watch.lap_ms();

  json report;
  report["group"] = g.text();
  report["rank_sequence"] = computed;
  report["expected_rank_sequence"] = expected;
  report["reflections_count"] = (long long)absorder::reflections(g).size();
  report["factorization_verified"] = factorization_ok;
  report["embedding_verified"] = embedding_ok;
  report["sperner"] = sperner;
  if (all_k) report["strong_sperner"] = sperner_ok;
  report["timings_ms"] = timings;
  std::cout << report.dump(2) << "\n";

  bool all_ok = ranks_match && factorization_ok && embedding_ok && sperner_ok;
  if (!all_ok) std::cerr << "verification failed for " << g.text() << "\n";
  return all_ok ? kExitOk : kExitVerification;
}

int cmd_factorize(const std::string& group, const std::string& element_text) {
  GroupId g = GroupId::parse(group);
  absorder::Element w = absorder::parse_element(element_text, g);
  absorder::Factorization f = absorder::factorize(w);
  std::cout << f.text() << "\n";
  std::cout << "length " << f.support() << "\n";
  if (f.support() != absolute_length(w) || !(phi(f) == w)) {
    std::cerr << "factorization self-check failed\n";
    return kExitVerification;
  }
  return kExitOk;
}

int cmd_dot(const std::string& group, bool absolute) {
  GroupId g = GroupId::parse(group);
  const long long guard = max_group_guard();
  GradedPoset poset = absolute ? build_absolute_order(g, guard) : claw_product(g, guard);
  std::cout << export_dot(poset);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"absolute orders on reflection groups: rank data, flag factorizations, "
               "Sperner certificates, DOT diagrams"};
  app.require_subcommand(1);

  std::string group;
  std::string element_text;
  bool all_k = false;
  int single_k = 0;
  bool with_certificates = false;
  bool inject_fault = false;
  bool dot_absolute = false;
  bool dot_claw = false;

  CLI::App* ranks = app.add_subcommand("ranks", "computed vs expected rank sequence");
  ranks->add_option("group", group, "group id: a<n>, b<n>, i2:<m>")->required();

  CLI::App* verify = app.add_subcommand(
      "verify", "factorization, embedding, and k-family certificates as a JSON report");
  verify->add_option("group", group, "group id: a<n>, b<n>, i2:<m>")->required();
  CLI::Option* k_opt = verify->add_option("--k", single_k, "verify a single k")
                           ->check(CLI::PositiveNumber);
  CLI::Option* all_opt = verify->add_flag("--all-k", all_k, "verify every k up to top rank + 1");
  k_opt->excludes(all_opt);
  verify->add_flag("--certificates", with_certificates,
                   "include families and dual chains in the report");
  verify->add_flag("--inject-certificate-fault", inject_fault)->group("");  // test hook

  CLI::App* factorize = app.add_subcommand("factorize", "standard-flag tier factorization");
  factorize->add_option("group", group, "group id: a<n>, b<n>, i2:<m>")->required();
  factorize->add_option("element", element_text, "element in cycle notation")->required();

  CLI::App* dot = app.add_subcommand("dot", "DOT diagram of a poset");
  dot->add_option("group", group, "group id: a<n>, b<n>, i2:<m>")->required();
  CLI::Option* abs_opt = dot->add_flag("--absolute", dot_absolute, "the absolute order");
  CLI::Option* claw_opt = dot->add_flag("--claw-product", dot_claw, "the claw product");
  abs_opt->excludes(claw_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (ranks->parsed()) return cmd_ranks(group);
    if (verify->parsed()) {
      if (all_k == (single_k > 0)) {
        std::cerr << "verify requires exactly one of --k <int> or --all-k\n";
        return kExitUsage;
      }
      return cmd_verify(group, all_k, single_k, with_certificates, inject_fault);
    }
    if (factorize->parsed()) return cmd_factorize(group, element_text);
    if (dot->parsed()) {
      if (dot_absolute == dot_claw) {
        std::cerr << "dot requires exactly one of --absolute or --claw-product\n";
        return kExitUsage;
      }
      return cmd_dot(group, dot_absolute);
    }
  } catch (const absorder::parse_error& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const absorder::size_guard_error& e) {
    std::cerr << e.what() << "\n";
    return kExitGuard;
  } catch (const absorder::error& e) {
    std::cerr << e.what() << "\n";
    return kExitVerification;
  }
  return kExitUsage;
}

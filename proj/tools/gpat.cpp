#include <gpat/gpat.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

using nlohmann::json;

namespace {

// Exact integers leave JSON as numbers while they fit and as decimal strings
// beyond that, so no consumer ever sees a rounded value.
json json_int(gpat::int128 v) {
  if (gpat::fits_int64(v)) return static_cast<std::int64_t>(v);
  return gpat::to_string(v);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    out += c;
    if (c == '"') out += '"';
  }
  out += '"';
  return out;
}

std::string join_int128(const std::vector<gpat::int128>& xs) {
  std::string line;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) line += ',';
    line += gpat::to_string(xs[i]);
  }
  return line;
}

void emit(const json& doc) { std::cout << doc.dump(2) << '\n'; }

// --- count -------------------------------------------------------------------

int run_count(const std::string& format, const std::string& pattern_text,
              const std::string& perm_text, bool positions) {
  gpat::GeneralizedPattern pattern = gpat::parse_pattern(pattern_text);
  gpat::Permutation host = gpat::parse_permutation(perm_text);
  gpat::OccurrenceSet occ = gpat::occurrences(pattern, host);

  if (format == "json") {
    json doc = {{"pattern", to_string(pattern)},
                {"permutation", to_string(host)},
                {"count", occ.positions.size()}};
    if (positions) doc["positions"] = occ.positions;
    emit(doc);
  } else if (format == "csv") {
    if (positions) {
      std::string header = "index";
      for (int i = 1; i <= pattern.length(); ++i) header += ",p" + std::to_string(i);
      std::cout << header << '\n';
      for (std::size_t i = 0; i < occ.positions.size(); ++i) {
        std::cout << i + 1;
        for (int p : occ.positions[i]) std::cout << ',' << p;
        std::cout << '\n';
      }
    } else {
      std::cout << "pattern,permutation,count\n"
                << csv_escape(to_string(pattern)) << ',' << csv_escape(to_string(host)) << ','
                << occ.positions.size() << '\n';
    }
  } else {
    std::cout << occ.positions.size() << '\n';
    if (positions) {
      for (const auto& tuple : occ.positions) {
        for (std::size_t i = 0; i < tuple.size(); ++i)
          std::cout << (i ? "," : "") << tuple[i];
        std::cout << '\n';
      }
    }
  }
  return 0;
}

// --- avoiders ------------------------------------------------------------------

int run_avoiders(const std::string& format, const std::vector<std::string>& pattern_texts, int n,
                 bool count_only, int cap) {
  std::vector<gpat::GeneralizedPattern> patterns;
  for (const auto& t : pattern_texts) patterns.push_back(gpat::parse_pattern(t));

  std::vector<std::string> listed;
  long long total = 0;
  gpat::for_each_avoider(patterns, n, [&](std::span<const int> w) {
    ++total;
    if (!count_only)
      listed.push_back(to_string(gpat::Permutation(std::vector<int>(w.begin(), w.end()))));
  }, cap);

  if (format == "json") {
    json doc = {{"patterns", pattern_texts}, {"n", n}, {"count", total}};
    if (!count_only) doc["avoiders"] = listed;
    emit(doc);
  } else if (format == "csv") {
    if (count_only) {
      std::cout << "n,count\n" << n << ',' << total << '\n';
    } else {
      std::cout << "index,permutation\n";
      for (std::size_t i = 0; i < listed.size(); ++i)
        std::cout << i + 1 << ',' << csv_escape(listed[i]) << '\n';
    }
  } else {
    if (count_only) {
      std::cout << total << '\n';
    } else {
      for (const auto& line : listed) std::cout << line << '\n';
    }
  }
  return 0;
}

// --- biject --------------------------------------------------------------------

struct BijectResult {
  std::string text;
  json blocks;  // block arrays when the image is a partition, null otherwise
};

BijectResult apply_biject(const std::string& map, const std::string& input, bool inverse) {
  auto partition_result = [](const gpat::SetPartition& p) {
    return BijectResult{to_string(p), json(p.blocks())};
  };
  auto perm_result = [](const gpat::Permutation& p) {
    return BijectResult{to_string(p), json()};
  };

  if (map == "abc-partition") {
    if (inverse)
      return partition_result(gpat::abc_avoider_to_partition(gpat::parse_permutation(input)));
    return perm_result(gpat::partition_to_abc_avoider(gpat::parse_set_partition(input)));
  }
  if (map == "acb-partition") {
    if (inverse)
      return partition_result(gpat::acb_avoider_to_partition(gpat::parse_permutation(input)));
    return perm_result(gpat::partition_to_acb_avoider(gpat::parse_set_partition(input)));
  }
  if (map == "involution") {
    if (inverse)
      return perm_result(gpat::avoider_to_involution(gpat::parse_permutation(input)).perm);
    return perm_result(gpat::involution_to_avoider(gpat::parse_permutation(input)));
  }
  if (map == "monotone") {
    if (inverse)
      return partition_result(gpat::avoider_to_monotone_partition(gpat::parse_permutation(input)));
    return perm_result(gpat::monotone_partition_to_avoider(gpat::parse_set_partition(input)));
  }
  if (map == "phi") {
    if (inverse) return partition_result(gpat::monotone_to_nop(gpat::parse_set_partition(input)));
    return partition_result(gpat::nop_to_monotone(gpat::parse_set_partition(input)));
  }
  if (map == "psi") {
    if (inverse) return partition_result(gpat::nop_to_monotone(gpat::parse_set_partition(input)));
    return partition_result(gpat::monotone_to_nop(gpat::parse_set_partition(input)));
  }
  if (map == "dyck") {
    if (inverse)
      return perm_result(gpat::dyck_to_perm(gpat::DyckPath(input)));
    return BijectResult{gpat::perm_to_dyck(gpat::parse_permutation(input)).steps(), json()};
  }
  if (map == "motzkin") {
    if (inverse)
      return perm_result(gpat::motzkin_to_perm(gpat::MotzkinPath(input)));
    return BijectResult{gpat::perm_to_motzkin(gpat::parse_permutation(input)).steps(), json()};
  }
  throw std::invalid_argument(
      "unknown bijection \"" + map +
      "\" (one of: abc-partition, acb-partition, involution, monotone, phi, psi, dyck, motzkin)");
}

int run_biject(const std::string& format, const std::string& map, const std::string& input,
               bool inverse) {
  BijectResult result = apply_biject(map, input, inverse);
  if (format == "json") {
    json doc = {{"map", map}, {"inverse", inverse}, {"input", input}, {"output", result.text}};
    if (!result.blocks.is_null()) doc["output_blocks"] = result.blocks;
    emit(doc);
  } else if (format == "csv") {
    std::cout << "map,inverse,input,output\n"
              << map << ',' << (inverse ? "true" : "false") << ',' << csv_escape(input) << ','
              << csv_escape(result.text) << '\n';
  } else {
    std::cout << result.text << '\n';
  }
  return 0;
}

// --- sequence ------------------------------------------------------------------

int run_sequence(const std::string& format, const std::string& name, int n_max, int cap) {
  gpat::SequenceTable table = gpat::build_sequence(name, n_max, cap);
  const bool triangular = !table.triangle.empty();

  if (format == "json") {
    json doc = {{"name", table.name}, {"values", json::array()}};
    for (const auto& v : table.values) doc["values"].push_back(json_int(v));
    if (triangular) {
      doc["triangle"] = json::array();
      for (const auto& row : table.triangle) {
        json r = json::array();
        for (const auto& v : row) r.push_back(json_int(v));
        doc["triangle"].push_back(std::move(r));
      }
    }
    emit(doc);
  } else if (format == "csv") {
    if (triangular) {
      std::cout << "n,k,value\n";
      for (std::size_t n = 0; n < table.triangle.size(); ++n)
        for (std::size_t k = 0; k < table.triangle[n].size(); ++k)
          std::cout << n << ',' << k << ',' << gpat::to_string(table.triangle[n][k]) << '\n';
    } else {
      std::cout << "n,value\n";
      for (std::size_t n = 0; n < table.values.size(); ++n)
        std::cout << n << ',' << gpat::to_string(table.values[n]) << '\n';
    }
  } else {
    if (triangular) {
      for (const auto& row : table.triangle) std::cout << join_int128(row) << '\n';
    } else {
      std::cout << join_int128(table.values) << '\n';
    }
  }
  return 0;
}

// --- poly ----------------------------------------------------------------------

int run_poly(const std::string& format, const std::string& family, int n,
             const std::string& method_name, int cap) {
  gpat::PolyMethod method = gpat::parse_poly_method(method_name);
  gpat::IntPolynomial poly;
  if (family == "eulerian-avoid") {
    poly = gpat::eulerian_avoid_poly(n, method, cap);
  } else if (family == "bessel") {
    poly = gpat::bessel_poly(n, method);
  } else {
    throw std::invalid_argument("unknown polynomial family \"" + family +
                                "\" (one of: eulerian-avoid, bessel)");
  }

  if (format == "json") {
    json coeffs = json::array();
    for (const auto& c : poly.coefficients()) coeffs.push_back(json_int(c));
    emit({{"family", family},
          {"n", n},
          {"method", method_name},
          {"coefficients", coeffs},
          {"text", to_string(poly)}});
  } else if (format == "csv") {
    std::cout << "degree,coefficient\n";
    for (int d = 0; d <= poly.degree(); ++d)
      std::cout << d << ',' << gpat::to_string(poly.coeff(d)) << '\n';
  } else {
    std::cout << to_string(poly) << '\n';
  }
  return 0;
}

// --- verify --------------------------------------------------------------------

int run_verify(const std::string& format, const std::string& filter, int n_max, int cap) {
  std::vector<gpat::ClaimResult> results = gpat::run_claims(filter, n_max, cap);
  if (results.empty())
    throw std::invalid_argument("no claims match filter \"" + filter + "\"");
  const bool ok = gpat::all_passed(results);

  if (format == "json") {
    json claims = json::array();
    for (const auto& r : results)
      claims.push_back({{"claim", r.claim},
                        {"group", r.group},
                        {"summary", r.summary},
                        {"n_range", r.n_range},
                        {"passed", r.passed},
                        {"witness", r.witness},
                        {"elapsed_ms", r.elapsed_ms}});
    emit({{"filter", filter}, {"n_max", n_max}, {"all_passed", ok}, {"claims", claims}});
  } else if (format == "csv") {
    std::cout << "claim,group,n_range,passed,elapsed_ms,witness\n";
    for (const auto& r : results)
      std::cout << r.claim << ',' << r.group << ',' << r.n_range << ','
                << (r.passed ? "true" : "false") << ',' << r.elapsed_ms << ','
                << csv_escape(r.witness) << '\n';
  } else {
    std::size_t width = 0;
    for (const auto& r : results) width = std::max(width, r.claim.size());
    int passed = 0;
    std::cout << std::fixed << std::setprecision(1);
    for (const auto& r : results) {
      std::cout << (r.passed ? "PASS " : "FAIL ") << r.claim
                << std::string(width - r.claim.size() + 2, ' ') << "n=" << r.n_range << "  "
                << r.summary << "  [" << r.elapsed_ms << " ms]\n";
      if (!r.passed) std::cout << "     counterexample: " << r.witness << '\n';
      passed += r.passed;
    }
    std::cout << results.size() << " claims, " << passed << " passed, "
              << results.size() - passed << " failed\n";
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generalized permutation patterns: matching, avoidance, bijections, sequences"};
  app.require_subcommand(1);

  std::string format = "text";
  int max_n = gpat::kDefaultEnumerationCap;
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--max-n", max_n, "guard for enumeration size")->capture_default_str();

  auto* count_cmd = app.add_subcommand("count", "count occurrences of a pattern in a permutation");
  std::string count_pattern, count_perm;
  bool count_positions = false;
  count_cmd->add_option("pattern", count_pattern, "pattern, e.g. a-bc")->required();
  count_cmd->add_option("permutation", count_perm, "host permutation")->required();
  count_cmd->add_flag("--positions", count_positions, "also list the occurrence tuples");

  auto* avoiders_cmd = app.add_subcommand("avoiders", "enumerate S_n avoiding given patterns");
  std::vector<std::string> avoider_patterns;
  int avoiders_n = 0;
  bool avoiders_count = false;
  avoiders_cmd->add_option("-p,--pattern", avoider_patterns, "pattern to avoid (repeatable)");
  avoiders_cmd->add_option("-n", avoiders_n, "permutation size")->required();
  avoiders_cmd->add_flag("--count", avoiders_count, "print the count instead of the listing");

  auto* biject_cmd = app.add_subcommand("biject", "apply one of the structure bijections");
  std::string biject_map, biject_input;
  bool biject_inverse = false;
  biject_cmd
      ->add_option("map", biject_map,
                   "abc-partition | acb-partition | involution | monotone | phi | psi | dyck | "
                   "motzkin")
      ->required();
  biject_cmd->add_option("input", biject_input, "permutation, partition, or path word");
  biject_cmd->add_flag("--inverse", biject_inverse, "apply the inverse direction");

  auto* sequence_cmd = app.add_subcommand("sequence", "print a counting sequence or triangle");
  std::string sequence_name;
  int sequence_n = 0;
  sequence_cmd
      ->add_option("name", sequence_name,
                   "bell | catalan | motzkin | involutions | bessel | stirling | s-star | ballot "
                   "| involutions-by-fixed")
      ->required();
  sequence_cmd->add_option("n_max", sequence_n, "largest n")->required();

  auto* poly_cmd = app.add_subcommand("poly", "print an exact polynomial");
  std::string poly_family, poly_method = "explicit";
  int poly_n = 0;
  poly_cmd->add_option("family", poly_family, "eulerian-avoid | bessel")->required();
  poly_cmd->add_option("n", poly_n, "index")->required();
  poly_cmd->add_option("--method", poly_method, "enumerate | recurrence | explicit | involution")
      ->capture_default_str();

  auto* verify_cmd = app.add_subcommand("verify", "run the claim verification suite");
  std::string verify_filter;
  int verify_n = 8;
  verify_cmd->add_option("--claim", verify_filter, "claim id fragment or group name");
  verify_cmd->add_option("--n", verify_n, "largest n each claim checks")->capture_default_str();

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*count_cmd) return run_count(format, count_pattern, count_perm, count_positions);
    if (*avoiders_cmd)
      return run_avoiders(format, avoider_patterns, avoiders_n, avoiders_count, max_n);
    if (*biject_cmd) return run_biject(format, biject_map, biject_input, biject_inverse);
    if (*sequence_cmd) return run_sequence(format, sequence_name, sequence_n, max_n);
    if (*poly_cmd) return run_poly(format, poly_family, poly_n, poly_method, max_n);
    if (*verify_cmd) return run_verify(format, verify_filter, verify_n, max_n);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

// lexpath: build windows of lexicographical path sums, inspect recurrent
// words, and run the named structural checks.
//
// Exit codes: 0 all pass, 1 any fail, 2 any inconclusive (and no fail),
// 64 usage error, 65 bad input data.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "lexpath/json_io.hpp"
#include "lexpath/verify.hpp"

using namespace lexpath;

namespace {

constexpr int kUsageError = 64;
constexpr int kDataError = 65;

void print_summary(const std::vector<ClaimReport>& reports) {
    size_t width = 8;
    for (const auto& r : reports) width = std::max(width, r.claim_id.size());
    for (const auto& r : reports) {
        std::string params;
        for (const auto& [k, v] : r.parameters) {
            if (!params.empty()) params += " ";
            params += k + "=" + v;
        }
        std::cout << r.claim_id << std::string(width + 2 - r.claim_id.size(), ' ')
                  << ClaimReport::verdict_name(r.verdict) << "  [" << r.window << "] "
                  << r.note << (params.empty() ? "" : "  (" + params + ")") << "\n";
    }
}

void write_reports(const std::vector<ClaimReport>& reports, const std::string& out_path,
                   bool jsonl_stdout) {
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot write " + out_path);
        for (const auto& r : reports) out << r.to_json().dump() << "\n";
    }
    if (jsonl_stdout)
        for (const auto& r : reports) std::cout << r.to_json().dump() << "\n";
}

int run_word(const std::string& spec, long len, int factors, int recurrence, bool as_json) {
    if (len <= 0) len = spec.rfind("explicit:", 0) == 0 ? 1 : 64;
    Word w = parse_word_spec(spec, len);
    if (w.size() > len && spec.rfind("explicit:", 0) != 0) w.symbols.resize(size_t(len));
    json j;
    j["spec"] = spec;
    j["prefix"] = w.to_string();
    if (!as_json) std::cout << w.to_string() << "\n";
    if (factors > 0) {
        FactorSet f = factor_set(w, std::min<long>(factors, w.size()));
        j["factors"] = factor_set_to_json(f);
        if (!as_json) {
            std::cout << "factors per length:";
            for (int n = 1; n <= f.max_len; ++n) std::cout << " " << n << ":" << f.level(n).size();
            std::cout << "\n";
        }
    }
    if (recurrence > 0) {
        json rec = json::object();
        if (!as_json) std::cout << "recurrence bounds:\n";
        for (int n = 1; n <= recurrence; ++n) {
            std::string val;
            try {
                auto b = recurrence_bound(w, n);
                val = b ? std::to_string(*b) : "none-within-prefix";
            } catch (const std::invalid_argument&) {
                val = "prefix-too-short";
            }
            rec[std::to_string(n)] = val;
            if (!as_json) std::cout << "  n=" << n << ": " << val << "\n";
        }
        j["recurrence"] = rec;
    }
    if (as_json) std::cout << j.dump(2) << "\n";
    return 0;
}

int run_build(const std::string& spec_path, const std::string& dot_path,
              const std::string& json_path) {
    GridWindow w = build_from_spec(window_spec_from_json(load_json_file(spec_path)));
    std::cout << "vertices: " << w.graph.size() << "\nedges: " << w.graph.edge_count() << "\n";
    if (!dot_path.empty()) {
        std::ofstream out(dot_path);
        if (!out) throw std::invalid_argument("cannot write " + dot_path);
        out << graph_to_dot(w.graph, spec_path);
        std::cout << "dot: " << dot_path << "\n";
    }
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) throw std::invalid_argument("cannot write " + json_path);
        out << graph_to_json(w.graph).dump(2) << "\n";
        std::cout << "json: " << json_path << "\n";
    }
    return 0;
}

int run_embed(const std::string& pattern_path, const std::string& host_path, bool labels) {
    LabelledGraph pattern = graph_from_json(load_json_file(pattern_path));
    LabelledGraph host = graph_from_json(load_json_file(host_path));
    auto e = find_embedding(pattern, host, labels);
    json j;
    j["found"] = e.has_value();
    if (e) j["map"] = e->map;
    std::cout << j.dump(2) << "\n";
    return e ? 0 : 1;
}

int run_report(const std::vector<std::string>& files) {
    std::vector<ClaimReport> reports;
    for (const auto& f : files) {
        std::ifstream in(f);
        if (!in) throw std::invalid_argument("cannot open " + f);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            json j = json::parse(line);
            ClaimReport r;
            r.claim_id = j.at("claim_id").get<std::string>();
            r.parameters = j.at("parameters").get<std::map<std::string, std::string>>();
            std::string v = j.at("verdict").get<std::string>();
            r.verdict = v == "pass" ? ClaimReport::Verdict::pass
                        : v == "fail" ? ClaimReport::Verdict::fail
                                      : ClaimReport::Verdict::inconclusive;
            r.witnesses = j.at("witnesses");
            r.window = j.at("window").get<std::string>();
            r.note = j.at("note").get<std::string>();
            reports.push_back(std::move(r));
        }
    }
    std::stable_sort(reports.begin(), reports.end(),
                     [](const ClaimReport& a, const ClaimReport& b) {
                         return a.claim_id < b.claim_id;
                     });
    print_summary(reports);
    return exit_code(reports);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lexpath: windows of lexicographical path sums and their checks"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);
    app.footer("Exit codes: 0 all pass, 1 any fail, 2 inconclusive only, 64 usage error,\n"
               "65 bad input data.");

    // word
    auto* word_cmd = app.add_subcommand("word", "generate a word prefix and its statistics");
    std::string word_spec;
    long word_len = 0;  // 0 = default: 64 for generators, natural for explicit
    int word_factors = 0, word_recurrence = 0;
    bool word_json = false;
    word_cmd->add_option("spec", word_spec,
                         "periodic:k=K | sturmian:cf=A1,A2,... | explicit:DIGITS")
        ->required();
    word_cmd->add_option("--len", word_len, "prefix length (default 64)");
    word_cmd->add_option("--factors", word_factors, "print factor counts up to this length");
    word_cmd->add_option("--recurrence", word_recurrence, "print recurrence bounds up to n");
    word_cmd->add_flag("--json", word_json, "emit JSON instead of text");

    // build
    auto* build_cmd = app.add_subcommand("build", "build a window from a JSON spec file");
    std::string build_spec, build_dot, build_json;
    build_cmd->add_option("spec", build_spec, "window spec JSON file")->required();
    build_cmd->add_option("--dot", build_dot, "write DOT to this path");
    build_cmd->add_option("--json", build_json, "write graph JSON to this path");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run a named check or the full suite");
    std::string claim_id, v_word = "periodic:k=2", v_word2, v_star = "boolean_sum",
                          v_star2, v_out, v_preset;
    int v_k = 2, v_rows = 4, v_max_pattern = 12, v_max_size = 4, v_jobs = 1;
    long v_cols = 12;
    uint64_t v_seed = 0;
    bool v_jsonl = false;
    verify_cmd
        ->add_option("claim", claim_id,
                     "4.2-claim1 | 4.2-claim2 | longenough | claim34 | "
                     "age-incomparability | primality | wqo-evidence | all")
        ->required();
    verify_cmd->add_option("--k", v_k, "modulus for congruence checks");
    verify_cmd->add_option("--rows", v_rows, "window rows");
    verify_cmd->add_option("--cols", v_cols, "window columns");
    verify_cmd->add_option("--word", v_word, "word spec");
    verify_cmd->add_option("--word2", v_word2, "second word spec (incomparability)");
    verify_cmd->add_option("--star", v_star, "star spec");
    verify_cmd->add_option("--star2", v_star2, "second star spec (incomparability)");
    verify_cmd->add_option("--max-pattern", v_max_pattern, "pattern size budget");
    verify_cmd->add_option("--max-size", v_max_size, "subgraph size for wqo evidence");
    verify_cmd->add_option("--seed", v_seed, "seed recorded in reports");
    verify_cmd->add_option("--jobs", v_jobs, "parallel checks for 'all'");
    verify_cmd->add_option("--preset", v_preset, "'desk' = the full default suite");
    verify_cmd->add_option("--out", v_out, "write JSONL reports to this path");
    verify_cmd->add_flag("--json", v_jsonl, "print JSONL to stdout instead of a table");

    // embed
    auto* embed_cmd = app.add_subcommand("embed", "induced-embedding search between graphs");
    std::string embed_pattern, embed_host;
    bool embed_labels = false;
    embed_cmd->add_option("pattern", embed_pattern, "pattern graph JSON")->required();
    embed_cmd->add_option("host", embed_host, "host graph JSON")->required();
    embed_cmd->add_flag("--labels", embed_labels, "respect vertex labels");

    // report
    auto* report_cmd = app.add_subcommand("report", "merge and summarize JSONL reports");
    std::vector<std::string> report_files;
    report_cmd->add_option("files", report_files, "report files")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kUsageError;
    }

    try {
        if (*word_cmd) return run_word(word_spec, word_len, word_factors, word_recurrence,
                                       word_json);
        if (*build_cmd) {
            try {
                return run_build(build_spec, build_dot, build_json);
            } catch (const std::invalid_argument& e) {
                std::cerr << "error: " << e.what() << "\n";
                return kDataError;
            }
        }
        if (*embed_cmd) return run_embed(embed_pattern, embed_host, embed_labels);
        if (*report_cmd) return run_report(report_files);

        // verify
        std::vector<ClaimReport> reports;
        if (claim_id == "all" || v_preset == "desk") {
            reports = desk_suite(v_jobs, v_seed);
        } else if (claim_id == "4.2-claim1") {
            reports.push_back(check_gk_diameter(v_k, v_rows, v_cols, v_seed));
        } else if (claim_id == "4.2-claim2") {
            reports.push_back(check_gk_path_locality(v_k, v_rows, v_cols, v_seed));
        } else if (claim_id == "longenough") {
            reports.push_back(check_locality_threshold(v_word, parse_star_spec(v_star), v_rows,
                                                       v_cols, v_seed));
        } else if (claim_id == "claim34") {
            reports.push_back(check_two_row_bounds(v_word, v_rows, v_cols, v_seed));
        } else if (claim_id == "age-incomparability") {
            if (v_word2.empty()) {
                std::cerr << "error: age-incomparability needs --word2\n";
                return kUsageError;
            }
            if (v_star2.empty()) v_star2 = v_star;
            reports.push_back(check_age_incomparability(v_word, parse_star_spec(v_star),
                                                        v_word2, parse_star_spec(v_star2),
                                                        v_max_pattern, v_rows, v_cols, v_seed));
        } else if (claim_id == "primality") {
            reports = check_primality_suite(v_seed);
        } else if (claim_id == "wqo-evidence") {
            reports.push_back(check_age_evidence(v_word, parse_star_spec(v_star), v_max_size,
                                                 v_rows, v_cols, 8, v_seed));
        } else {
            std::cerr << "error: unknown claim id '" << claim_id << "'\n";
            return kUsageError;
        }
        write_reports(reports, v_out, v_jsonl);
        if (!v_jsonl) print_summary(reports);
        return exit_code(reports);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDataError;
    }
}

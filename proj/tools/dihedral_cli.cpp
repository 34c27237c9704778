// Command-line surface: compute word-length tables and lambda_1 reports,
// run claim checkers, and drive the stabilizer / lambda_1 scans.
//
// Exit codes: 0 = success / confirmed, 1 = verification failure or
// counterexample found, 2 = usage error.  Identical invocations (including
// --seed) produce byte-identical stdout/file output; elapsed time goes to
// stderr only.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "dihedral/dihedral.hpp"

namespace {

using dihedral::json;

struct Range {
    int lo = 0, hi = 0;
};

Range parse_range(const std::string& text) {
    auto pos = text.find("..");
    if (pos == std::string::npos)
        throw CLI::ValidationError("range", "expected the form lo..hi, got '" + text + "'");
    Range r;
    try {
        r.lo = std::stoi(text.substr(0, pos));
        r.hi = std::stoi(text.substr(pos + 2));
    } catch (const std::exception&) {
        throw CLI::ValidationError("range", "expected integers in lo..hi, got '" + text + "'");
    }
    if (r.lo > r.hi) throw CLI::ValidationError("range", "empty range '" + text + "'");
    return r;
}

/// Resolve --output against DIHEDRAL_OUT_DIR (applies to relative paths).
std::string resolve_output_path(const std::string& path) {
    if (path.empty()) return path;
    std::filesystem::path p(path);
    if (p.is_relative()) {
        if (const char* dir = std::getenv("DIHEDRAL_OUT_DIR")) p = std::filesystem::path(dir) / p;
    }
    return p.string();
}

void emit(const std::string& payload, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << payload;
        return;
    }
    std::string resolved = resolve_output_path(output_path);
    std::ofstream out(resolved, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file " + resolved);
    out << payload;
}

std::string table_of(const dihedral::WordLengthTable& t) {
    std::string out = "element      length\n";
    char buf[64];
    for (int i = 0; i < t.n; ++i) {
        std::snprintf(buf, sizeof buf, "%-12s %d\n", dihedral::to_string(dihedral::rotation(t.n, i)).c_str(),
                      t.rotation_lengths[i]);
        out += buf;
    }
    for (int i = 0; i < t.n; ++i) {
        std::snprintf(buf, sizeof buf, "%-12s %d\n", dihedral::to_string(dihedral::reflection(t.n, i)).c_str(),
                      t.reflection_lengths[i]);
        out += buf;
    }
    return out;
}

std::string table_of(const dihedral::VerificationReport& r) {
    std::string out = "claim: " + r.claim + "\n";
    out += "result: " + std::string(r.pass ? "pass" : "FAIL") + "\n";
    out += "cases checked: " + std::to_string(r.cases_checked) + "\n";
    for (const auto& [k, v] : r.params) out += k + ": " + v + "\n";
    if (!r.witnesses.empty()) {
        out += "witnesses (" + std::to_string(r.witnesses_total) + " total):\n";
        for (const auto& w : r.witnesses) out += "  " + w + "\n";
    }
    return out;
}

std::string table_of(const dihedral::ConjectureScanResult& r) {
    std::string out = "n range: " + std::to_string(r.n_min) + ".." + std::to_string(r.n_max) + "\n";
    out += "sets scanned: " + std::to_string(r.sets_scanned) + "\n";
    out += "levels checked: " + std::to_string(r.levels_checked) + "\n";
    out += "non-generating orbits skipped: " + std::to_string(r.non_generating_skipped) + "\n";
    out += "confirmed: " + std::string(r.confirmed ? "true" : "false") + "\n";
    if (!r.counterexamples.empty()) {
        out += "counterexamples (" + std::to_string(r.counterexamples.size()) + "):\n";
        for (const auto& e : r.counterexamples) {
            out += "  n=" + std::to_string(e.n) + " a=" + std::to_string(e.a) + " b=" + std::to_string(e.b) +
                   " l=" + std::to_string(e.level) + " stab={";
            bool first = true;
            for (int m : e.stab.members()) {
                out += (first ? "" : ",") + std::to_string(m);
                first = false;
            }
            out += "}\n";
        }
    }
    return out;
}

int run_lengths(int n, int a, int b, const std::string& engine, const std::string& format,
                const std::string& output) {
    dihedral::GeneratingSet S(n, a, b);
    dihedral::WordLengthTable table =
        engine == "bfs" ? dihedral::bfs_lengths(n, S) : dihedral::sumset_lengths(n, S);
    bool both = engine == "both";
    if (both && !dihedral::same_lengths(table, dihedral::bfs_lengths(n, S))) {
        std::cerr << "engine mismatch: sumset and bfs tables differ for n=" << n << " a=" << a
                  << " b=" << b << "\n";
        return 1;
    }
    if (format == "json") {
        json j = dihedral::to_json(table);
        if (both) {
            j["engine"] = "both";
            j["engines_agree"] = true;
        }
        emit(j.dump(2) + "\n", output);
    } else if (format == "table") {
        emit(table_of(table), output);
    } else {
        emit(dihedral::to_csv(table), output);
    }
    return 0;
}

int run_lambda1(int n, int a, int b, const std::string& engine, const std::string& format,
                const std::string& output) {
    dihedral::GeneratingSet S(n, a, b);
    dihedral::LambdaReport rep =
        dihedral::lambda1(n, S, engine == "bfs" ? dihedral::Engine::bfs : dihedral::Engine::sumset);
    bool both = engine == "both";
    if (both) {
        dihedral::LambdaReport check = dihedral::lambda1(n, S, dihedral::Engine::bfs);
        if (check.lambda1 != rep.lambda1 || check.max_reflection_length != rep.max_reflection_length) {
            std::cerr << "engine mismatch: sumset and bfs lambda1 reports differ for n=" << n << "\n";
            return 1;
        }
    }
    if (format == "csv") {
        emit(dihedral::csv_header_lambda() + dihedral::to_csv_row(rep), output);
    } else if (format == "table") {
        std::string out = "n: " + std::to_string(rep.n) + "\n";
        out += "S': {0, " + std::to_string(rep.given.a()) + ", " + std::to_string(rep.given.b()) + "}\n";
        out += "canonical: (" + std::to_string(rep.canonical.a()) + ", " + std::to_string(rep.canonical.b()) + ")\n";
        out += "lambda1: " + std::to_string(rep.lambda1) + "\n";
        out += "witness: g=" + dihedral::to_string(rep.witness.g) + " s=" + dihedral::to_string(rep.witness.s) + "\n";
        out += "max reflection length: " + std::to_string(rep.max_reflection_length) + "\n";
        out += "bound floor(n/2)+1: " + std::to_string(rep.bound_n_half) + "\n";
        if (rep.bound_prime_third)
            out += "bound floor(p/3)+1: " + std::to_string(*rep.bound_prime_third) + "\n";
        emit(out, output);
    } else {
        json j = dihedral::to_json(rep);
        if (both) {
            j["engine"] = "both";
            j["engines_agree"] = true;
        }
        emit(j.dump(2) + "\n", output);
    }
    return 0;
}

int emit_report(const dihedral::VerificationReport& rep, const std::string& format,
                const std::string& output) {
    if (format == "table") {
        emit(table_of(rep), output);
    } else if (format == "csv") {
        emit("claim,pass,cases_checked,witnesses_total\n" + rep.claim + "," +
                 (rep.pass ? "true" : "false") + "," + std::to_string(rep.cases_checked) + "," +
                 std::to_string(rep.witnesses_total) + "\n",
             output);
    } else {
        emit(dihedral::to_json(rep).dump(2) + "\n", output);
    }
    return rep.pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"word lengths and the lambda_1 stability metric for three-reflection "
                 "presentations of dihedral groups"};
    app.require_subcommand(1);

    std::string format, output, engine = "sumset";
    int jobs = 0;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format: csv, json or table")
            ->check(CLI::IsMember({"csv", "json", "table"}));
        cmd->add_option("--output", output,
                        "output file (relative paths resolve against DIHEDRAL_OUT_DIR); default stdout");
        cmd->add_option("--jobs", jobs, "max worker threads (0 = hardware)");
    };

    int n = 0, a = 0, b = 0, trials = 1000, n_single = 0;
    std::string n_range_text, claim, checkpoint, primes_text = "5,7,11,13,17,19,23";
    std::uint64_t seed = 20251; // recorded in every randomized report
    int kneser_n_max = 12;

    CLI::App* lengths = app.add_subcommand("lengths", "word-length table for one generating set");
    lengths->add_option("--n", n, "modulus of D_n")->required();
    lengths->add_option("--a", a, "offset a of S' = {0,a,b}")->required();
    lengths->add_option("--b", b, "offset b of S' = {0,a,b}")->required();
    lengths->add_option("--engine", engine, "sumset, bfs or both")
        ->check(CLI::IsMember({"sumset", "bfs", "both"}));
    add_common(lengths);

    CLI::App* lam = app.add_subcommand("lambda1", "lambda_1 report for one generating set");
    lam->add_option("--n", n, "modulus of D_n")->required();
    lam->add_option("--a", a, "offset a")->required();
    lam->add_option("--b", b, "offset b")->required();
    lam->add_option("--engine", engine, "sumset, bfs or both")
        ->check(CLI::IsMember({"sumset", "bfs", "both"}));
    add_common(lam);

    CLI::App* verify = app.add_subcommand("verify", "run one claim checker over a parameter range");
    verify->add_option("--claim", claim, "one of: cauchy-davenport, kneser, growth, prime-growth, "
                                         "lambda-bound, prime-lambda-bound, sharpness, sqrt")
        ->required()
        ->check(CLI::IsMember({"cauchy-davenport", "kneser", "growth", "prime-growth", "lambda-bound",
                               "prime-lambda-bound", "sharpness", "sqrt"}));
    verify->add_option("--n-range", n_range_text, "n range lo..hi (claim-specific default)");
    verify->add_option("--seed", seed, "seed for randomized checks (recorded in the report)");
    verify->add_option("--trials", trials, "random trials per prime (cauchy-davenport)");
    verify->add_option("--primes", primes_text, "comma-separated primes (cauchy-davenport)");
    verify->add_option("--n-max", kneser_n_max, "largest modulus for the exhaustive kneser check");
    add_common(verify);

    CLI::App* scan = app.add_subcommand("scan", "stabilizer scan over all canonical generating sets");
    scan->add_option("--n-range", n_range_text, "n range lo..hi")->required();
    scan->add_option("--checkpoint", checkpoint, "append-only JSONL checkpoint file; resumes if present");
    add_common(scan);

    CLI::App* survey = app.add_subcommand("survey", "lambda_1 survey, one row per canonical orbit");
    survey->add_option("--n-range", n_range_text, "n range lo..hi")->required();
    add_common(survey);

    CLI::App* sqrt_cmd = app.add_subcommand("sqrt", "check the S' = {0,1,floor(sqrt n)} length bound");
    sqrt_cmd->add_option("--n", n_single, "single modulus");
    sqrt_cmd->add_option("--n-range", n_range_text, "n range lo..hi");
    add_common(sqrt_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        std::cerr << e.what() << "\n" << app.help();
        return 2;
    }

    auto started = std::chrono::steady_clock::now();
    int rc = 0;
    try {
        if (lengths->parsed()) {
            rc = run_lengths(n, a, b, engine, format.empty() ? "csv" : format, output);
        } else if (lam->parsed()) {
            rc = run_lambda1(n, a, b, engine, format.empty() ? "json" : format, output);
        } else if (verify->parsed()) {
            std::optional<Range> r;
            if (!n_range_text.empty()) r = parse_range(n_range_text);
            dihedral::VerificationReport rep;
            if (claim == "cauchy-davenport") {
                std::vector<int> primes;
                std::stringstream ss(primes_text);
                for (std::string tok; std::getline(ss, tok, ',');) primes.push_back(std::stoi(tok));
                for (int p : primes)
                    if (!dihedral::is_prime(p))
                        throw std::invalid_argument("--primes entry " + std::to_string(p) + " is not prime");
                rep = dihedral::verify_cauchy_davenport(primes, trials, seed, jobs);
            } else if (claim == "kneser") {
                rep = dihedral::verify_kneser_exhaustive(kneser_n_max, jobs);
            } else if (claim == "growth") {
                Range rr = r.value_or(Range{3, 100});
                rep = dihedral::verify_growth(rr.lo, rr.hi, jobs);
            } else if (claim == "prime-growth") {
                Range rr = r.value_or(Range{2, 97});
                rep = dihedral::verify_prime_growth(rr.hi, jobs);
            } else if (claim == "lambda-bound") {
                Range rr = r.value_or(Range{3, 100});
                rep = dihedral::verify_lambda_bound(rr.lo, rr.hi, jobs);
            } else if (claim == "prime-lambda-bound") {
                Range rr = r.value_or(Range{2, 97});
                rep = dihedral::verify_prime_lambda_bound(rr.hi, jobs);
            } else if (claim == "sharpness") {
                Range rr = r.value_or(Range{3, 200});
                rep = dihedral::verify_sharpness(rr.lo, rr.hi);
            } else { // sqrt
                Range rr = r.value_or(Range{5, 400});
                rep = dihedral::verify_sqrt(rr.lo, rr.hi);
            }
            rc = emit_report(rep, format.empty() ? "json" : format, output);
        } else if (scan->parsed()) {
            Range rr = parse_range(n_range_text);
            dihedral::ConjectureScanResult result = dihedral::scan_stabilizers(rr.lo, rr.hi, jobs, checkpoint);
            if (format == "table") {
                emit(table_of(result), output);
            } else if (format == "csv") {
                std::string out = "n,a,b,l,stab_size\n";
                for (const auto& e : result.counterexamples)
                    out += std::to_string(e.n) + "," + std::to_string(e.a) + "," + std::to_string(e.b) +
                           "," + std::to_string(e.level) + "," + std::to_string(e.stab.count()) + "\n";
                emit(out, output);
            } else {
                emit(dihedral::to_json(result).dump(2) + "\n", output);
            }
            rc = result.confirmed ? 0 : 1;
        } else if (survey->parsed()) {
            Range rr = parse_range(n_range_text);
            auto rows = dihedral::survey_lambda(rr.lo, rr.hi, jobs);
            if (format == "json") {
                json arr = json::array();
                for (const auto& row : rows)
                    arr.push_back({{"n", row.n},
                                   {"a", row.a},
                                   {"b", row.b},
                                   {"lambda1", row.lambda1},
                                   {"max_refl_len", row.max_reflection_length},
                                   {"bound", row.bound},
                                   {"tight", row.tight},
                                   {"prime_condition_met", row.prime_condition_met}});
                emit(arr.dump(2) + "\n", output);
            } else { // csv and table share the row layout
                std::string out = dihedral::csv_header_survey();
                for (const auto& row : rows) out += dihedral::to_csv_row(row);
                emit(out, output);
            }
        } else if (sqrt_cmd->parsed()) {
            if ((n_single == 0) == n_range_text.empty())
                throw std::invalid_argument("sqrt: give exactly one of --n or --n-range");
            Range rr = n_single ? Range{n_single, n_single} : parse_range(n_range_text);
            json arr = json::array();
            std::string csv = "n,max_length,bound,holds\n";
            bool all_hold = true;
            for (int m = rr.lo; m <= rr.hi; ++m) {
                dihedral::SqrtBoundReport rep = dihedral::check_sqrt_bound(m);
                all_hold = all_hold && rep.holds;
                arr.push_back(dihedral::to_json(rep));
                csv += std::to_string(rep.n) + "," + std::to_string(rep.max_length) + "," +
                       std::to_string(rep.bound) + "," + (rep.holds ? "true" : "false") + "\n";
            }
            if (format == "csv" || format == "table")
                emit(csv, output);
            else
                emit((n_single ? arr.front() : arr).dump(2) + "\n", output);
            rc = all_hold ? 0 : 1;
        }
    } catch (const dihedral::verification_failure& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - started);
    std::cerr << "completed in " << elapsed.count() << " ms\n";
    return rc;
}

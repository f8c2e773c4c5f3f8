// percol: verify, construct, glue, classify, enumerate and diff perfect
// colorings of the multipath graphs C_inf . K_n and C_inf . complement(K_n).
//
// Exit codes: 0 success / positive result, 1 negative domain result,
// 2 usage or parse error, 3 search budget exceeded.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "percol/percol.hpp"

using namespace percol;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kNegative = 1, kUsage = 2, kBudget = 3 };

/// "[2 1 0 0 1 2]" for block-monochrome periods, profile tuples otherwise.
std::string bracket_form(const PeriodicColoring& c) {
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < c.length(); ++i) {
        if (i) os << ' ';
        const auto& b = c.period()[i];
        auto s = b.support();
        if (s.size() == 1) os << s.front();
        else os << b.str();
    }
    os << ']';
    return os.str();
}

void print_matrix(std::ostream& out, const ParameterMatrix& m) {
    int width = 1;
    for (const auto& r : m.rows())
        for (int v : r) width = std::max<int>(width, static_cast<int>(std::to_string(v).size()));
    for (int i = 0; i < m.size(); ++i) {
        out << "  " << std::setw(2) << i << " |";
        for (int j = 0; j < m.size(); ++j) out << ' ' << std::setw(width) << m(i, j);
        out << '\n';
    }
}

void emit(const PeriodicColoring& c, const std::string& out_path) {
    std::cout << bracket_form(c) << '\n';
    const auto text = io::to_json(c).dump();
    if (out_path.empty()) {
        std::cout << text << '\n';
    } else {
        std::ofstream f(out_path);
        if (!f) throw ParseError("cannot write " + out_path);
        f << text << '\n';
    }
}

BlockProfile profile_arg(const std::string& text) {
    try {
        return BlockProfile(json::parse(text).get<std::vector<int>>());
    } catch (const json::exception& e) {
        throw ParseError("bad profile '" + text + "': " + e.what());
    }
}

std::vector<BlockProfile> profiles_arg(const std::string& text) {
    try {
        std::vector<BlockProfile> out;
        for (auto& r : json::parse(text).get<std::vector<std::vector<int>>>()) out.emplace_back(r);
        return out;
    } catch (const json::exception& e) {
        throw ParseError("bad profile list '" + text + "': " + e.what());
    }
}

SeriesKind mirror_type(const std::string& t) {
    if (t == "11") return SeriesKind::Mirror11;
    if (t == "12") return SeriesKind::Mirror12;
    return SeriesKind::Mirror22;
}

unsigned long long budget_from_env() {
    SearchOptions defaults;
    const char* env = std::getenv("PERCOL_BUDGET");
    if (!env || !*env) return defaults.budget;
    try {
        return std::stoull(env);
    } catch (const std::logic_error&) {
        throw ParseError(std::string("PERCOL_BUDGET is not a number: ") + env);
    }
}

Catalog read_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return io::read_jsonl(in);
}

void print_counts(std::ostream& out, const Catalog& cat) {
    auto counts = cat.class_counts();
    out << "family " << cat.family().str() << ", colors <= " << cat.bounds().max_colors
        << ", primitive period <= " << cat.bounds().max_period << '\n';
    for (auto l : kAllLabels) out << "  " << std::left << std::setw(32) << to_string(l) << counts[l] << '\n';
    out << "  " << std::left << std::setw(32) << "unclassifiable" << cat.unclassifiable_count() << '\n';
    out << "  " << std::left << std::setw(32) << "total" << cat.size() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Perfect colorings of infinite multipath graphs"};
    app.require_subcommand(1);

    // verify
    std::string verify_file;
    bool verify_json = false;
    auto* verify = app.add_subcommand("verify", "Check perfectness and print the parameter matrix");
    verify->add_option("coloring", verify_file, "coloring JSON file")->required();
    verify->add_flag("--json", verify_json, "machine-readable output");

    // enumerate
    std::string en_kind = "empty", en_method = "oracle", en_out, en_format = "json";
    int en_n = 1, en_colors = 1, en_period = 1, en_jobs = 1;
    auto* enumerate = app.add_subcommand("enumerate", "Build a catalog of perfect colorings within bounds");
    enumerate->add_option("--kind", en_kind)->check(CLI::IsMember({"empty", "complete"}))->required();
    enumerate->add_option("--n", en_n)->check(CLI::PositiveNumber)->required();
    enumerate->add_option("--colors", en_colors, "maximum number of colors")->check(CLI::PositiveNumber)->required();
    enumerate->add_option("--max-period", en_period, "maximum primitive period")->check(CLI::PositiveNumber)->required();
    enumerate->add_option("--method", en_method)->check(CLI::IsMember({"oracle", "theorem"}));
    enumerate->add_option("--out", en_out, "output file (default: stdout)");
    enumerate->add_option("--format", en_format)->check(CLI::IsMember({"json", "csv"}));
    enumerate->add_option("--jobs", en_jobs, "worker threads for the oracle")->check(CLI::PositiveNumber);

    // classify / glue
    std::string classify_file, glue_file, glue_out;
    auto* classify_cmd = app.add_subcommand("classify", "Classify a perfect coloring");
    classify_cmd->add_option("coloring", classify_file)->required();
    auto* glue_cmd = app.add_subcommand("glue", "Identify equivalent colors");
    glue_cmd->add_option("coloring", glue_file)->required();
    glue_cmd->add_option("--out", glue_out);

    // construct
    auto* construct = app.add_subcommand("construct", "Build colorings from the constructive families");
    construct->require_subcommand(1);
    std::string c_out;
    construct->add_option("--out", c_out, "write the coloring JSON here");
    int c_k = 1;
    std::string c_type = "22";
    auto* c_cyclic = construct->add_subcommand("cyclic", "S(k)");
    c_cyclic->add_option("--k", c_k)->required();
    auto* c_mirror = construct->add_subcommand("mirror", "S11(k), S12(k), S22(k)");
    c_mirror->add_option("--k", c_k)->required();
    c_mirror->add_option("--type", c_type)->check(CLI::IsMember({"11", "12", "22"}))->required();

    std::string c_kind = "empty", c_path, c_profiles, c_even, c_odd, c_blocks, c_matrix, c_b0, c_b1;
    int c_n = 1;
    auto add_family = [&](CLI::App* sub) {
        sub->add_option("--kind", c_kind)->check(CLI::IsMember({"empty", "complete"}));
        sub->add_option("--n", c_n)->check(CLI::PositiveNumber)->required();
    };
    auto* c_lift = construct->add_subcommand("lift", "Block-monochrome copy of a path coloring");
    c_lift->add_option("--path", c_path, "path coloring JSON file")->required();
    add_family(c_lift);
    auto* c_disj = construct->add_subcommand("disjunctive", "psi . Phi over a path coloring");
    c_disj->add_option("--psi", c_path, "path coloring JSON file")->required();
    c_disj->add_option("--profiles", c_profiles, "JSON list of block profiles, one per psi color")->required();
    add_family(c_disj);
    auto* c_conj = construct->add_subcommand("conjugate", "Conjugate an even and an odd semicoloring");
    c_conj->add_option("--even", c_even)->required();
    c_conj->add_option("--odd", c_odd)->required();
    auto* c_three = construct->add_subcommand("three-periodic", "Complete-block coloring with a 3-block period");
    c_three->add_option("--blocks", c_blocks, "JSON list of three block profiles")->required();
    c_three->add_option("--n", c_n)->check(CLI::PositiveNumber)->required();
    auto* c_prop = construct->add_subcommand("propagate", "Restore a coloring from a matrix and two blocks");
    c_prop->add_option("--matrix", c_matrix, "matrix JSON file")->required();
    c_prop->add_option("--b0", c_b0)->required();
    c_prop->add_option("--b1", c_b1)->required();
    add_family(c_prop);

    // diff
    std::string diff_a, diff_b;
    auto* diff = app.add_subcommand("diff", "Compare two catalog files");
    diff->add_option("a", diff_a)->required();
    diff->add_option("b", diff_b)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*verify) {
            auto c = io::coloring_from_json(io::load_file(verify_file));
            auto m = infer_matrix(c);
            if (verify_json) {
                json out = {{"perfect", m.has_value()}};
                if (m) out["matrix"] = m->rows();
                else out["witness"] = io::to_json(m.error());
                std::cout << out.dump() << '\n';
            } else if (m) {
                std::cout << "perfect " << c.str() << "\nparameter matrix:\n";
                print_matrix(std::cout, *m);
            } else {
                std::cout << "not perfect: " << m.error().str() << '\n';
            }
            return m ? kOk : kNegative;
        }

        if (*enumerate) {
            Family family(block_kind_from_string(en_kind), en_n);
            SearchOptions opts{budget_from_env(), en_jobs};
            Bounds bounds{en_colors, en_period};
            Catalog cat = en_method == "oracle" ? brute_force_enumerate(family, bounds, opts)
                                                : theorem_enumerate(family, bounds, opts);
            std::ofstream file;
            if (!en_out.empty()) {
                file.open(en_out);
                if (!file) throw ParseError("cannot write " + en_out);
            }
            std::ostream& out = en_out.empty() ? std::cout : file;
            if (en_format == "csv") io::write_csv_summary(out, cat);
            else io::write_jsonl(out, cat);
            print_counts(en_out.empty() ? std::cerr : std::cout, cat);
            return kOk;
        }

        if (*classify_cmd) {
            auto c = io::coloring_from_json(io::load_file(classify_file));
            if (!is_perfect(c)) {
                std::cout << "not perfect: " << infer_matrix(c).error().str() << '\n';
                return kNegative;
            }
            auto cls = classify(c);
            if (!cls) {
                std::cout << "unclassifiable: " << cls.error().reason << '\n';
                return kNegative;
            }
            std::cout << to_string(cls->label) << '\n';
            std::visit(
                [](const auto& ev) {
                    using T = std::decay_t<decltype(ev)>;
                    if constexpr (std::is_same_v<T, DisjunctiveEvidence>) {
                        std::cout << "path coloring " << bracket_form(ev.path) << "\nprofiles";
                        for (const auto& b : ev.profiles) std::cout << ' ' << b.str();
                        std::cout << '\n';
                    } else if constexpr (std::is_same_v<T, SemicoloringEvidence>) {
                        std::cout << "even " << io::to_json(ev.even).dump() << "\nodd " << io::to_json(ev.odd).dump()
                                  << '\n';
                    } else {
                        std::cout << "blocks " << ev.b0.str() << ' ' << ev.b1.str() << ' ' << ev.b2.str() << '\n';
                    }
                },
                cls->evidence);
            return kOk;
        }

        if (*glue_cmd) {
            auto c = io::coloring_from_json(io::load_file(glue_file));
            if (!is_perfect(c)) {
                std::cout << "not perfect: " << infer_matrix(c).error().str() << '\n';
                return kNegative;
            }
            std::cout << "classes:";
            for (const auto& cls : equivalence_partition(c)) {
                std::cout << " {";
                for (std::size_t i = 0; i < cls.size(); ++i) std::cout << (i ? "," : "") << cls[i];
                std::cout << '}';
            }
            std::cout << '\n';
            emit(glue(c), glue_out);
            return kOk;
        }

        if (*construct) {
            const Family family(block_kind_from_string(c_kind), c_n);
            if (*c_cyclic) emit(series_cyclic(c_k), c_out);
            else if (*c_mirror) emit(series_mirror(c_k, mirror_type(c_type)), c_out);
            else if (*c_lift) emit(lift_block_monochrome(io::coloring_from_json(io::load_file(c_path)), family), c_out);
            else if (*c_disj)
                emit(disjunctive_multipath(io::coloring_from_json(io::load_file(c_path)), profiles_arg(c_profiles), family),
                     c_out);
            else if (*c_conj) {
                auto r = conjugate_semicolorings(io::semicoloring_from_json(io::load_file(c_even)),
                                                 io::semicoloring_from_json(io::load_file(c_odd)));
                if (!r) {
                    std::cout << "not perfect: " << r.error().str() << '\n';
                    return kNegative;
                }
                emit(*r, c_out);
            } else if (*c_three) {
                auto blocks = profiles_arg(c_blocks);
                if (blocks.size() != 3) throw ParseError("--blocks needs exactly three profiles");
                auto r = three_periodic_complete(blocks[0], blocks[1], blocks[2], c_n);
                if (!r) {
                    std::cout << "not perfect: " << r.error().str() << '\n';
                    return kNegative;
                }
                emit(*r, c_out);
            } else if (*c_prop) {
                auto result = propagate(io::matrix_from_json(io::load_file(c_matrix)), profile_arg(c_b0),
                                        profile_arg(c_b1), family);
                if (auto* c = std::get_if<PeriodicColoring>(&result)) {
                    emit(*c, c_out);
                } else if (auto* nb = std::get_if<NotBiInfinite>(&result)) {
                    std::cout << "not bi-infinite: orbit cycles from block " << nb->cycle_start << " with length "
                              << nb->cycle_length << '\n';
                    return kNegative;
                } else {
                    const auto& con = std::get<Contradiction>(result);
                    std::cout << "contradiction at block " << con.block << ": " << con.reason << '\n';
                    return kNegative;
                }
            }
            return kOk;
        }

        if (*diff) {
            auto d = catalog_diff(read_catalog(diff_a), read_catalog(diff_b));
            if (d.identical()) {
                std::cout << "identical\n";
                return kOk;
            }
            for (const auto& c : d.only_in_a) std::cout << "< " << io::to_json(c).dump() << '\n';
            for (const auto& c : d.only_in_b) std::cout << "> " << io::to_json(c).dump() << '\n';
            std::cout << d.only_in_a.size() << " only in " << diff_a << ", " << d.only_in_b.size() << " only in "
                      << diff_b << '\n';
            return kNegative;
        }
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << " (raise PERCOL_BUDGET)\n";
        return kBudget;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kOk;
}

// Command line driver: validation, construction, identity suites, symmetry
// transforms, intersection numbers, and family generators.  JSON in, JSON or
// report out; exit 0 on success, 1 on a failed check or rejected input,
// 2 on malformed input.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>

#include "leonard/json_io.hpp"

using namespace leonard;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInputError = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::ParseError, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        // the message carries the offending position
        throw Error(Errc::ParseError, e.what());
    }
}

ParameterArray load_parray(const std::string& path, std::string* raw_out = nullptr) {
    std::string raw = read_file(path);
    if (raw_out) *raw_out = raw;
    return parray_from_json(parse_json(raw));
}

void write_output(const json& doc, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << doc.dump(2) << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) throw Error(Errc::ParseError, "cannot write '" + out_path + "'");
        out << doc.dump(2) << "\n";
    }
}

struct SuiteResult {
    std::string name;
    bool pass = false;
    std::vector<std::string> failures;
};

SuiteResult run_suite(const std::string& name, const std::function<void(SuiteResult&)>& body) {
    SuiteResult result;
    result.name = name;
    try {
        body(result);
        result.pass = result.failures.empty();
    } catch (const Error& e) {
        result.failures.push_back(e.what());
        result.pass = false;
    }
    return result;
}

void collect_report(SuiteResult& out, const VerificationReport& report) {
    for (const auto& f : report.failures) {
        std::string entry = f.condition;
        if (f.index >= 0) entry += "[i=" + std::to_string(f.index) + "]";
        out.failures.push_back(entry + ": " + f.detail);
    }
}

std::vector<IntersectionMethod> applicable_methods(int d) {
    std::vector<IntersectionMethod> methods{IntersectionMethod::bbcc,
                                            IntersectionMethod::cibiform};
    if (d >= 2) {
        methods.push_back(IntersectionMethod::bici);
        methods.push_back(IntersectionMethod::bcform);
    }
    return methods;
}

const char* method_name(IntersectionMethod m) {
    switch (m) {
        case IntersectionMethod::bbcc: return "bbcc";
        case IntersectionMethod::cibiform: return "cibiform";
        case IntersectionMethod::bici: return "bici";
        case IntersectionMethod::bcform: return "bcform";
    }
    return "?";
}

int cmd_validate(const std::string& file) {
    ParameterArray pa = load_parray(file);
    auto report = validate(pa);
    for (const char* cond : {"PA1", "PA2", "PA3", "PA4", "PA5"}) {
        bool ok = true;
        for (const auto& v : report.violations) ok &= v.condition != cond;
        std::cout << cond << ": " << (ok ? "pass" : "FAIL") << "\n";
    }
    if (!report.valid()) {
        std::cout << report.summary() << "\n";
        return kExitFail;
    }
    return kExitPass;
}

int cmd_check(const std::string& file, const std::string& report_path,
              const std::string& only_suite, bool parallel) {
    std::string raw;
    ParameterArray pa = load_parray(file, &raw);
    json doc = parse_json(raw);
    auto started = std::chrono::steady_clock::now();

    std::vector<std::pair<std::string, std::function<void(SuiteResult&)>>> suites;
    suites.emplace_back("validation", [&](SuiteResult& r) {
        auto report = validate(pa);
        for (const auto& v : report.violations)
            r.failures.push_back(v.condition + ": " + v.detail);
    });

    // the remaining suites need a realization; build lazily and share
    auto real = std::make_shared<std::optional<Realization>>();
    auto get_real = [real, &pa]() -> const Realization& {
        if (!real->has_value()) real->emplace(build_split(pa));
        return real->value();
    };
    if (validate(pa).valid()) {
        get_real(); // materialize before any parallel fan-out
        suites.emplace_back("leonard-axioms", [&](SuiteResult& r) {
            collect_report(r, verify_leonard(get_real()));
            if (!is_normalizing(get_real(), NormalizingWhich::E_star_0))
                r.failures.push_back("E*_0 is not normalizing");
            if (!is_normalizing(get_real(), NormalizingWhich::E_0))
                r.failures.push_back("E_0 is not normalizing");
            diagonal_sequences(get_real()); // throws on any cross-check failure
        });
        suites.emplace_back("td", [&](SuiteResult& r) {
            auto td = td_coefficients(get_real());
            if (pa.d >= 3) {
                auto witness = td_commutator(get_real().A, get_real().A_star,
                                             td.beta + pa.ctx->one(), td.gamma, td.varrho);
                if (witness.is_zero())
                    r.failures.push_back("uniqueness witness vanished at beta+1");
            }
        });
        suites.emplace_back("wrap-around", [&](SuiteResult& r) {
            if (pa.d < 2) return; // vacuous below the stated diameter
            if (!wraparound_check(get_real()))
                r.failures.push_back("a wrap-around identity fails");
        });
        suites.emplace_back("dagger", [&](SuiteResult& r) {
            dagger_conjugator(get_real()); // throws with details on failure
        });
        suites.emplace_back("intersection-oracle", [&](SuiteResult& r) {
            auto brute = brute_intersection(get_real());
            for (auto m : applicable_methods(pa.d)) {
                if (!(closed_forms(pa, m) == brute))
                    r.failures.push_back(std::string("method ") + method_name(m) +
                                         " disagrees with the basis change");
            }
            // the document may pin the expected intersection numbers
            if (doc.contains("expected_intersections")) {
                auto expected = intersection_from_json(pa.ctx, doc["expected_intersections"]);
                if (!(expected == brute))
                    r.failures.push_back("computed data differs from the expected block");
            }
        });
        suites.emplace_back("duality", [&](SuiteResult& r) {
            collect_report(r, duality_identity_suite(pa, brute_intersection(get_real())));
        });
        suites.emplace_back("recurrence", [&](SuiteResult& r) {
            collect_report(r, recurrence_identity_suite(get_real(), brute_intersection(get_real())));
        });
    }

    static const std::vector<std::string> known_suites{
        "validation", "leonard-axioms", "td",       "wrap-around",
        "dagger",     "intersection-oracle", "duality", "recurrence"};
    if (!only_suite.empty() &&
        std::find(known_suites.begin(), known_suites.end(), only_suite) == known_suites.end()) {
        std::cerr << "unknown suite '" << only_suite << "'\n";
        return kExitInputError;
    }

    std::vector<SuiteResult> results;
    auto selected = [&](const std::string& name) {
        // an invalid array reduces every run to the validation verdict
        if (suites.size() == 1) return name == suites.front().first;
        return only_suite.empty() || only_suite == name;
    };
    if (parallel) {
        std::vector<std::future<SuiteResult>> futures;
        for (auto& [name, body] : suites)
            if (selected(name)) futures.push_back(std::async(std::launch::async, run_suite, name, body));
        for (auto& f : futures) results.push_back(f.get());
    } else {
        for (auto& [name, body] : suites)
            if (selected(name)) results.push_back(run_suite(name, body));
    }

    bool all_pass = true;
    json suites_json = json::array();
    for (const auto& r : results) {
        all_pass &= r.pass;
        std::cout << r.name << ": " << (r.pass ? "pass" : "FAIL") << "\n";
        for (const auto& f : r.failures) std::cout << "  " << f << "\n";
        suites_json.push_back(json{{"name", r.name}, {"pass", r.pass}, {"failures", r.failures}});
    }
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - started)
                       .count();
    std::cerr << "elapsed: " << elapsed << " ms\n";

    if (!report_path.empty()) {
        json report{{"input_digest", digest(raw)}, {"suites", suites_json}};
        write_output(report, report_path);
    }
    return all_pass ? kExitPass : kExitFail;
}

int cmd_construct(const std::string& file, const std::string& out) {
    auto real = build_split(load_parray(file));
    write_output(realization_to_json(real), out);
    return kExitPass;
}

int cmd_transform(const std::string& file, const std::string& word, const std::string& out) {
    auto pa = load_parray(file);
    auto g = D4Element::parse(word);
    write_output(to_json(transform_d4(pa, g)), out);
    return kExitPass;
}

int cmd_intersections(const std::string& file, const std::string& method) {
    auto pa = load_parray(file);
    auto real = build_split(pa);
    auto brute = brute_intersection(real);
    if (method == "brute") {
        write_output(to_json(brute), "");
    } else if (method == "all") {
        for (auto m : applicable_methods(pa.d)) {
            if (!(closed_forms(pa, m) == brute)) {
                std::cerr << "method " << method_name(m) << " disagrees with the basis change\n";
                return kExitFail;
            }
        }
        write_output(to_json(brute), "");
    } else {
        IntersectionMethod m;
        if (method == "bbcc") m = IntersectionMethod::bbcc;
        else if (method == "cibiform") m = IntersectionMethod::cibiform;
        else if (method == "bici") m = IntersectionMethod::bici;
        else if (method == "bcform") m = IntersectionMethod::bcform;
        else throw Error(Errc::ParseError, "unknown method '" + method + "'");
        write_output(to_json(closed_forms(pa, m)), "");
    }
    return kExitPass;
}

int cmd_roundtrip(const std::string& file) {
    auto pa = load_parray(file);
    auto extracted = extract_parray(build_split(pa));
    if (!(extracted == pa)) {
        std::cerr << "round trip changed the array\n";
        return kExitFail;
    }
    std::cout << "round trip exact\n";
    return kExitPass;
}

FamilySpec spec_from_cli(const std::string& name, int d, const std::string& field,
                         const std::string& params_text) {
    FamilySpec spec;
    spec.family = family_from_name(name);
    spec.d = d;
    spec.ctx = FieldCtx::from_descriptor(field);
    json params = parse_json(params_text);
    for (const auto& [key, value] : params.items())
        spec.params.emplace(key, spec.ctx->parse(value.get<std::string>()));
    return spec;
}

int cmd_family_gen(const FamilySpec& spec) {
    auto pa = generate_parray(spec);
    auto data = closed_intersection(spec);
    write_output(json{{"parameter_array", to_json(pa)}, {"intersection_data", to_json(data)}}, "");
    return kExitPass;
}

int cmd_family_sample(const std::string& name, int d, const std::string& field, uint64_t seed,
                      int count) {
    auto specs = sample_admissible(family_from_name(name), d, FieldCtx::from_descriptor(field),
                                   seed, count);
    json out = json::array();
    for (const auto& spec : specs) out.push_back(to_json(spec));
    write_output(out, "");
    return kExitPass;
}

int cmd_family_table(const FamilySpec& spec) {
    auto data = closed_intersection(spec);
    std::cout << family_name(spec.family) << " d=" << spec.d << " over "
              << spec.ctx->descriptor() << "\n";
    std::cout << "  i | a_i | b_i | c_i\n";
    for (int i = 0; i <= spec.d; ++i) {
        std::cout << "  " << i << " | " << data.a[i].str() << " | "
                  << (i <= spec.d - 1 ? data.b[i].str() : "-") << " | "
                  << (i >= 1 ? data.c[i - 1].str() : "-") << "\n";
    }
    return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Leonard system toolkit"};
    app.require_subcommand(1);

    std::string file, out_path, report_path, suite, word, method = "brute";
    bool parallel = false;

    auto* validate_cmd = app.add_subcommand("validate", "check the five array conditions");
    validate_cmd->add_option("file", file)->required();

    auto* check_cmd = app.add_subcommand("check", "run every identity suite");
    check_cmd->add_option("file", file)->required();
    check_cmd->add_option("--report", report_path, "write the report as JSON");
    check_cmd->add_option("--suite", suite, "restrict to one suite");
    check_cmd->add_flag("--parallel", parallel, "fan suites out over threads");

    auto* construct_cmd = app.add_subcommand("construct", "emit the split-form realization");
    construct_cmd->add_option("file", file)->required();
    construct_cmd->add_option("--out", out_path);

    auto* transform_cmd = app.add_subcommand("transform", "apply a symmetry word");
    transform_cmd->add_option("file", file)->required();
    transform_cmd->add_option("--g", word, "word over down/Down/star joined by '.'")->required();
    transform_cmd->add_option("--out", out_path);

    auto* inter_cmd = app.add_subcommand("intersections", "compute intersection numbers");
    inter_cmd->add_option("file", file)->required();
    inter_cmd->add_option("--method", method, "brute|bbcc|cibiform|bici|bcform|all");

    auto* round_cmd = app.add_subcommand("roundtrip", "build then extract, compare exactly");
    round_cmd->add_option("file", file)->required();

    auto* family_cmd = app.add_subcommand("family", "family generators");
    family_cmd->require_subcommand(1);
    std::string fam_name, fam_field = "Q", fam_params = "{}";
    int fam_d = 1, fam_count = 1;
    uint64_t fam_seed = 0;
    auto* gen_cmd = family_cmd->add_subcommand("gen", "emit array and intersection documents");
    gen_cmd->add_option("--name", fam_name)->required();
    gen_cmd->add_option("--d", fam_d)->required();
    gen_cmd->add_option("--field", fam_field);
    gen_cmd->add_option("--params", fam_params, "JSON object of scalars");
    auto* sample_cmd = family_cmd->add_subcommand("sample", "seeded admissible search");
    sample_cmd->add_option("--name", fam_name)->required();
    sample_cmd->add_option("--d", fam_d)->required();
    sample_cmd->add_option("--field", fam_field);
    sample_cmd->add_option("--seed", fam_seed);
    sample_cmd->add_option("--count", fam_count);
    auto* table_cmd = family_cmd->add_subcommand("table", "human-readable b/c/a table");
    table_cmd->add_option("--name", fam_name)->required();
    table_cmd->add_option("--d", fam_d)->required();
    table_cmd->add_option("--field", fam_field);
    table_cmd->add_option("--params", fam_params, "JSON object of scalars");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitInputError;
    }

    try {
        if (validate_cmd->parsed()) return cmd_validate(file);
        if (check_cmd->parsed()) return cmd_check(file, report_path, suite, parallel);
        if (construct_cmd->parsed()) return cmd_construct(file, out_path);
        if (transform_cmd->parsed()) return cmd_transform(file, word, out_path);
        if (inter_cmd->parsed()) return cmd_intersections(file, method);
        if (round_cmd->parsed()) return cmd_roundtrip(file);
        if (family_cmd->parsed()) {
            if (gen_cmd->parsed())
                return cmd_family_gen(spec_from_cli(fam_name, fam_d, fam_field, fam_params));
            if (sample_cmd->parsed())
                return cmd_family_sample(fam_name, fam_d, fam_field, fam_seed, fam_count);
            if (table_cmd->parsed())
                return cmd_family_table(spec_from_cli(fam_name, fam_d, fam_field, fam_params));
        }
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        switch (e.code()) {
            case Errc::ParseError:
            case Errc::OutOfRange:
            case Errc::StructuralError:
            case Errc::CompositeP:
            case Errc::ReducibleModulus:
            case Errc::NonMonicModulus:
                return kExitInputError;
            default: return kExitFail;
        }
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}

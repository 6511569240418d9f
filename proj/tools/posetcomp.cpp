#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "posetcomp/hochschild.hpp"
#include "posetcomp/poset_file.hpp"
#include "posetcomp/verify.hpp"

using namespace posetcomp;
using nlohmann::json;

namespace {

enum Exit { ok = 0, verification_failed = 1, parse_failed = 2, bad_flags = 3, resource_limited = 4 };

int exit_code_for(ErrorKind k) {
    switch (k) {
        case ErrorKind::parse_error:
        case ErrorKind::unknown_name:
        case ErrorKind::antisymmetry_violation:
        case ErrorKind::not_t0:
            return parse_failed;
        case ErrorKind::invalid_field:
            return bad_flags;
        case ErrorKind::resource_limit:
            return resource_limited;
        default:
            return verification_failed;
    }
}

void print_betti(const BettiTable& t, bool as_json, const char* what, const Poset& p, const FieldSpec& f) {
    for (const auto& [deg, b] : t.degrees) {
        if (as_json)
            std::cout << json{{"kind", what}, {"poset", p.name}, {"field", f.name()}, {"degree", deg}, {"betti", b}}.dump()
                      << '\n';
        else
            std::cout << deg << '\t' << b << '\n';
    }
}

void print_reports(const std::vector<SuiteReport>& reports, bool as_json) {
    for (const auto& r : reports) {
        for (const auto& c : r.checks) {
            const std::size_t passed = c.trials - c.failures;
            if (as_json) {
                std::cout << json{{"kind", "check"},       {"suite", r.suite},          {"poset", r.poset},
                                  {"check", c.name},       {"trials", c.trials},        {"failures", c.failures},
                                  {"passed", c.passed()},  {"witnesses", c.witnesses}, {"notes", c.notes}}
                                 .dump()
                          << '\n';
                continue;
            }
            std::cout << r.suite << '\t' << c.name << ": " << passed << '/' << c.trials << '\t'
                      << (c.passed() ? "PASS" : "FAIL") << '\n';
            for (const auto& w : c.witnesses) std::cout << "\twitness\t" << w << '\n';
            for (const auto& n : c.notes) std::cout << "\tnote\t" << n << '\n';
        }
        if (as_json)
            std::cout << json{{"kind", "suite"}, {"suite", r.suite}, {"poset", r.poset}, {"passed", r.passed()}}.dump()
                      << '\n';
        else
            std::cout << r.suite << '\t' << r.poset << '\t' << (r.passed() ? "PASS" : "FAIL") << '\n';
        std::cerr << r.suite << ": " << r.seconds << " s\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Poset nerve, incidence algebra and Hochschild comparison tool"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "one JSON object per output line");

    std::string file, field_text = "q", normalized_text = "off", suite, delta_text = "printed", fault;
    int max_degree = -1, trials = 100;
    std::uint64_t seed = 42;
    std::size_t cap = default_hh_cap;

    auto* betti = app.add_subcommand("betti", "Betti numbers of the nerve");
    betti->add_option("file", file, "poset file")->required();
    betti->add_option("--max-degree", max_degree, "top degree (default 3)")->check(CLI::NonNegativeNumber);
    betti->add_option("--field", field_text, "q or gf:<p>");
    betti->add_option("--normalized", normalized_text, "on or off")->check(CLI::IsMember({"on", "off"}));

    auto* hh = app.add_subcommand("hh", "Betti numbers of the full Hochschild cochain complex");
    hh->add_option("file", file, "poset file")->required();
    hh->add_option("--max-degree", max_degree, "top degree (default 2)")->check(CLI::NonNegativeNumber);
    hh->add_option("--field", field_text, "q or gf:<p>");
    hh->add_option("--cap", cap, "largest cochain space dimension allowed");

    auto* verify = app.add_subcommand("verify", "seeded property suites");
    verify->add_option("file", file, "poset file")->required();
    std::vector<std::string> suites = suite_names();
    suites.push_back("all");
    verify->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(suites));
    verify->add_option("--max-degree", max_degree, "top degree (default 3)")->check(CLI::NonNegativeNumber);
    verify->add_option("--trials", trials, "random trials per check")->check(CLI::NonNegativeNumber);
    verify->add_option("--seed", seed, "random seed");
    verify->add_option("--field", field_text, "q or gf:<p>");
    verify->add_option("--delta-sign", delta_text, "printed or desuspended")
        ->check(CLI::IsMember({"printed", "desuspended"}));
    verify->add_option("--inject-fault", fault, "test fixture")->check(CLI::IsMember({"sign-flip"}));

    auto* info = app.add_subcommand("info", "summary of a poset file");
    info->add_option("file", file, "poset file")->required();
    info->add_option("--max-degree", max_degree, "top chain degree (default 3)")->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? ok : bad_flags;
    }

    try {
        const FieldSpec field = FieldSpec::parse(field_text);
        const Poset p = load_poset_file(file);

        if (*betti) {
            const int top = max_degree < 0 ? 3 : max_degree;
            print_betti(nerve_betti(make_nerve(p), top, normalized_text == "on", field), as_json, "betti", p, field);
        } else if (*hh) {
            const int top = max_degree < 0 ? 2 : max_degree;
            print_betti(hh_betti(p, top, cap, field), as_json, "hh", p, field);
        } else if (*verify) {
            VerifyOptions o;
            o.max_degree = max_degree < 0 ? 3 : max_degree;
            o.trials = trials;
            o.seed = seed;
            o.field = field;
            o.delta_sign = parse_delta_sign(delta_text);
            o.fault_iota_sign_flip = fault == "sign-flip";
            const auto reports = run_suite(suite, p, o);
            print_reports(reports, as_json);
            for (const auto& r : reports)
                if (!r.passed()) return verification_failed;
        } else if (*info) {
            const int top = max_degree < 0 ? 3 : max_degree;
            const NervePtr nerve = make_nerve(p);
            const std::size_t opens = topology_from_poset(p).opens.size();
            if (as_json) {
                json j{{"kind", "info"}, {"poset", p.name}, {"elements", p.size()},
                       {"dim_I", p.comparable_pairs().size()}, {"opens", opens}};
                json chains = json::array(), strict = json::array();
                for (int n = 0; n <= top; ++n) {
                    chains.push_back(nerve->basis(n).size());
                    strict.push_back(nerve->strict_basis(n).size());
                }
                j["chains"] = chains;
                j["strict_chains"] = strict;
                std::cout << j.dump() << '\n';
            } else {
                std::cout << "name\t" << p.name << '\n'
                          << "elements\t" << p.size() << '\n'
                          << "dim I\t" << p.comparable_pairs().size() << '\n';
                for (int n = 0; n <= top; ++n) std::cout << "chains deg" << n << '\t' << nerve->basis(n).size() << '\n';
                for (int n = 0; n <= top; ++n)
                    std::cout << "strict chains deg" << n << '\t' << nerve->strict_basis(n).size() << '\n';
                std::cout << "opens\t" << opens << '\n';
            }
        }
    } catch (const Error& e) {
        std::cerr << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
        return exit_code_for(e.kind());
    }
    return ok;
}

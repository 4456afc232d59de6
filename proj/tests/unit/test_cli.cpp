#include "autobasis/automaton.hpp"
#include "autobasis/cli.hpp"
#include "autobasis/report.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

using namespace autobasis;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::map<std::string, std::string> kv(const Run& r) {
    std::map<std::string, std::string> m;
    for (auto& [k, v] : parse_report(r.out))
        m[k] = v;
    return m;
}

std::string temp_file(const std::string& name, const std::string& text) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << text;
    return path.string();
}

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("basis report") {
        Run r = run({"basis", "corpus:evil2", "--asymptotic", "--kv"});
        CHECK(r.code == kExitDecided);
        auto m = kv(r);
        CHECK(m["format"] == "autobasis-report/1");
        CHECK(m["order"] == "3");
        CHECK(m["exceptions"] == "[1, 2, 4, 7]");
        CHECK(m["threshold"] == "8");
        CHECK(m["theoretical_order"] == "11258999068426240");
    }

    TEST_CASE("exit codes") {
        CHECK(run({"basis", "corpus:evil2", "--max-order", "2"}).code == kExitInconclusive);
        CHECK(run({"basis", "corpus:cantor3"}).code == kExitDecided);
        CHECK(run({"frobnicate"}).code == kExitUsage);
        CHECK(run({}).code == kExitUsage);
        CHECK(run({"classify", "corpus:nope"}).code == kExitUsage);
        CHECK(run({"basis", "corpus:evil2", "--mode", "sideways"}).code == kExitUsage);
        CHECK(run({"exceptions", "corpus:evil2", "--order", "2", "--target", "mult:0"}).code ==
              kExitUsage);
        CHECK(run({"--help"}).code == kExitDecided);

        const std::size_t saved = max_subset_states();
        set_max_subset_states(2);
        Run limited = run({"classify", "corpus:rudinshapiro2"});
        set_max_subset_states(saved);
        CHECK(limited.code == kExitPrecondition);
        CHECK(limited.err.find("resource limit") != std::string::npos);
    }

    TEST_CASE("files and parse errors") {
        std::string good = temp_file("autobasis_cli_good.txt",
                                     "base 2\nstates 2\ninitial 0\nfinals 0\n"
                                     "0 0 -> 0\n0 1 -> 1\n1 0 -> 1\n1 1 -> 0\n");
        Run g = run({"gcd", good, "--kv"});
        CHECK(g.code == kExitDecided);
        CHECK(kv(g)["gcd"] == "1");
        CHECK(kv(g)["witnesses"] == "[3, 5]");

        std::string bad = temp_file("autobasis_cli_bad.txt", "base 2\nstates 1\ninitial 0\nfinals 0\n0 2 -> 0\n");
        Run b = run({"classify", bad});
        CHECK(b.code == kExitUsage);
        CHECK(b.err.find("line 5") != std::string::npos);

        std::string unreachable = temp_file("autobasis_cli_warn.txt",
                                            "base 2\nstates 2\ninitial 0\nfinals 0\n0 0 -> 0\n");
        Run w = run({"classify", unreachable});
        CHECK(w.code == kExitDecided);
        CHECK(w.err.find("unreachable") != std::string::npos);
    }

    TEST_CASE("subcommands") {
        auto c = kv(run({"classify", "corpus:evil2", "--kv"}));
        CHECK(c["growth"] == "exponential");
        auto p = kv(run({"classify", "hard(2,3)", "--kv"}));
        CHECK(p["growth"] == "exponential");

        auto e = kv(run({"exceptions", "corpus:cantor3", "--order", "2", "--mode", "exact-sum",
                         "--target", "even", "--kv"}));
        CHECK(e["finite"] == "true");
        CHECK(e["exceptions"] == "[]");

        auto inf = kv(run({"exceptions", "corpus:evil2", "--order", "2", "--kv"}));
        CHECK(inf["finite"] == "false");
        CHECK(inf["exceptions_upto_bound"] == "[1, 2, 4, 7, 31, 127, 511, 2047, 8191]");

        auto n = kv(run({"count", "--summands", "digits01base4,digits02base4", "--order", "2",
                         "--n", "1000", "--kv"}));
        CHECK(n["representations"] == "1");
        CHECK(run({"count", "--summands", "evil2", "--order", "2", "--n", "3"}).code == kExitUsage);

        auto s = kv(run({"syndetic", "corpus:evil2", "--c", "3", "--kv"}));
        CHECK(s["holds"] == "true");
        auto rr = kv(run({"run", "corpus:evil2", "--c", "1", "--kv"}));
        CHECK(rr["start"] == "5");

        auto cz = kv(run({"cantor", "--k", "3", "--y", "0", "--z", "2", "--t", "1", "--m", "1", "--kv"}));
        CHECK(cz["alpha"] == "0");
        CHECK(cz["beta"] == "1");
        CHECK(cz["summand_bound"] == "81");
        CHECK(cz["mfold"] == "gap");
        CHECK(cz["gap_lo"] == "1/3");

        Run list = run({"corpus", "list"});
        CHECK(list.out.find("rudinshapiro2") != std::string::npos);
        Run show = run({"corpus", "show", "cantor3", "--direction", "lsd"});
        CHECK(show.out.find("direction lsd") != std::string::npos);
    }

    TEST_CASE("output is deterministic") {
        for (std::vector<std::string> args :
             {std::vector<std::string>{"basis", "corpus:rudinshapiro2"},
              std::vector<std::string>{"classify", "corpus:cantor3", "--kv"},
              std::vector<std::string>{"exceptions", "corpus:evil2", "--order", "2"}}) {
            Run a = run(args), b = run(args);
            CHECK(a.out == b.out);
        }
    }
}

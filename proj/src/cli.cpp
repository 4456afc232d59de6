#include "autobasis/cli.hpp"

#include "autobasis/basis.hpp"
#include "autobasis/cantor.hpp"
#include "autobasis/corpus.hpp"
#include "autobasis/error.hpp"
#include "autobasis/gcd.hpp"
#include "autobasis/growth.hpp"
#include "autobasis/numeral.hpp"
#include "autobasis/report.hpp"
#include "autobasis/sumset.hpp"
#include "autobasis/text_format.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

namespace autobasis {

namespace {

struct Loaded {
    Dfa machine;
    std::string label;
};

Loaded load_machine(const std::string& source, std::ostream& err) {
    if (source.starts_with("corpus:")) {
        CorpusEntry e = corpus_entry(source.substr(7));
        return {e.machine, "corpus:" + e.name};
    }
    if (!std::filesystem::exists(source)) {
        // Bare corpus names are accepted when no such file exists.
        try {
            CorpusEntry e = corpus_entry(source);
            return {e.machine, "corpus:" + e.name};
        } catch (const InputError&) {
            throw InputError("cannot open '" + source + "'");
        }
    }
    std::ifstream in(source);
    if (!in)
        throw InputError("cannot open '" + source + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        ParsedAutomaton parsed = parse_automaton_text(buffer.str());
        for (const std::string& w : parsed.warnings)
            err << source << ": warning: " << w << '\n';
        return {parsed.machine, source};
    } catch (const ParseError& e) {
        throw InputError(source + ": " + e.what());
    }
}

Dfa load_target(const std::string& target, unsigned base, std::ostream& err) {
    if (target == "all")
        return canonical_language(base);
    if (target == "even")
        return divisibility_automaton(base, 2);
    if (target.starts_with("mult:")) {
        BigNat d = parse_nat(target.substr(5));
        if (d < 1 || d > std::numeric_limits<std::uint32_t>::max())
            throw InputError("mult:D needs 1 <= D < 2^32");
        return divisibility_automaton(base, static_cast<std::uint32_t>(d));
    }
    return load_machine(target, err).machine;
}

Word parse_word(const std::string& text, unsigned k, const char* name) {
    Word w;
    if (text.empty() || text == "-")
        return w;
    auto digit = [&](const std::string& s) {
        BigNat d = parse_nat(s);
        if (d >= k)
            throw InputError(std::string(name) + ": digit " + s + " out of range for base " +
                             std::to_string(k));
        return static_cast<Digit>(d);
    };
    if (text.find(',') != std::string::npos) {
        std::stringstream in(text);
        std::string part;
        while (std::getline(in, part, ','))
            w.push_back(digit(part));
    } else {
        for (char c : text)
            w.push_back(digit(std::string(1, c)));
    }
    return w;
}

std::string msd_string(const Word& w) {
    Word r(w.rbegin(), w.rend());
    return word_to_string(r);
}

void emit(const KeyValueReport& report, bool kv, std::ostream& out) {
    if (kv) {
        out << report.str();
        return;
    }
    std::size_t width = 0;
    for (const auto& [key, value] : report.entries())
        width = std::max(width, key.size());
    for (const auto& [key, value] : report.entries()) {
        if (key == "format")
            continue;
        out << key << std::string(width - key.size() + 2, ' ') << value << '\n';
    }
}

void add_witness(KeyValueReport& r, const ExpWitness& w) {
    // Words are printed most significant digit first.
    r.add("witness_s", msd_string(w.s));
    r.add("witness_t", msd_string(w.t));
    r.add("witness_u", msd_string(w.u));
    r.add("witness_v", msd_string(w.v));
}

const char* reason_name(BasisReason r) {
    switch (r) {
        case BasisReason::Ok: return "ok";
        case BasisReason::NonSparseFailed: return "sparse";
        case BasisReason::GcdFailed: return "gcd";
        case BasisReason::OneNotInS: return "one-not-in-set";
    }
    return "?";
}

SumMode parse_mode(const std::string& s) {
    if (s == "exact-sum")
        return SumMode::Exact;
    if (s == "atmost")
        return SumMode::AtMost;
    throw InputError("--mode must be exact-sum or atmost");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Additive bases among automatic sets", "autobasis"};
    app.require_subcommand(1);
    app.fallthrough();
    bool kv = false;
    app.add_flag("--kv", kv, "Print the flat key-value report");

    std::string file;
    auto file_arg = [&](CLI::App* sub) {
        sub->add_option("file", file, "Automaton file or corpus:NAME")->required();
    };

    auto* classify_cmd = app.add_subcommand("classify", "Polynomial or exponential growth");
    file_arg(classify_cmd);

    auto* gcd_cmd = app.add_subcommand("gcd", "gcd of the set with witnesses");
    file_arg(gcd_cmd);

    auto* basis_cmd = app.add_subcommand("basis", "Decide the basis property");
    file_arg(basis_cmd);
    bool exact_flag = false, asymptotic_flag = false;
    unsigned max_order = 8;
    std::string basis_mode = "atmost";
    auto* asym_opt = basis_cmd->add_flag("--asymptotic", asymptotic_flag, "Asymptotic basis (default)");
    basis_cmd->add_flag("--exact", exact_flag, "Basis for all of N")->excludes(asym_opt);
    basis_cmd->add_option("--max-order", max_order, "Largest order tried")
        ->check(CLI::Range(1u, 64u));
    basis_cmd->add_option("--mode", basis_mode, "exact-sum or atmost");

    auto* exc_cmd = app.add_subcommand("exceptions", "Values of a target missed by j-fold sums");
    file_arg(exc_cmd);
    unsigned order = 2;
    std::string target = "all";
    std::string exc_mode = "exact-sum";
    std::string bound_text = "10000";
    exc_cmd->add_option("--order", order, "Number of summands")->required()->check(CLI::Range(1u, 64u));
    exc_cmd->add_option("--target", target, "all, even, mult:D, corpus:NAME or a file");
    exc_cmd->add_option("--mode", exc_mode, "exact-sum or atmost");
    exc_cmd->add_option("--bound", bound_text, "Listing bound for infinite results");

    auto* count_cmd = app.add_subcommand("count", "Number of ordered representations of n");
    std::string count_file;
    count_cmd->add_option("file", count_file, "Automaton file or corpus:NAME");
    unsigned count_order = 2;
    std::string n_text;
    bool distinct = false;
    std::vector<std::string> summands;
    count_cmd->add_option("--order", count_order, "Number of summands")->required()->check(CLI::Range(1u, 64u));
    count_cmd->add_option("--n", n_text, "Value to represent")->required();
    count_cmd->add_flag("--distinct", distinct, "Pairwise distinct summands only");
    count_cmd->add_option("--summands", summands, "Comma-separated summand sets")->delimiter(',');

    auto* synd_cmd = app.add_subcommand("syndetic", "Check that gaps in the set are at most c");
    file_arg(synd_cmd);
    unsigned gap = 1;
    synd_cmd->add_option("--c", gap, "Gap bound")->required()->check(CLI::Range(1u, 1'000'000u));
    synd_cmd->add_option("--bound", bound_text, "Listing bound for violations");

    auto* run_cmd = app.add_subcommand("run", "Least N with N..N+c all in the set");
    file_arg(run_cmd);
    unsigned run_len = 1;
    run_cmd->add_option("--c", run_len, "Run length minus one")->required()->check(CLI::Range(0u, 1'000'000u));

    auto* cantor_cmd = app.add_subcommand("cantor", "Cantor set parameters and bounds");
    unsigned ck = 3;
    std::string cu, cy, cz, cv;
    unsigned ct = 0, cm = 0;
    cantor_cmd->add_option("--k", ck, "Base")->required()->check(CLI::Range(2u, 1000u));
    cantor_cmd->add_option("--u", cu, "Prefix word, most significant digit first");
    cantor_cmd->add_option("--y", cy, "First block")->required();
    cantor_cmd->add_option("--z", cz, "Second block")->required();
    cantor_cmd->add_option("--v", cv, "Optional word v");
    cantor_cmd->add_option("--t", ct, "Exponent for the summand bound");
    cantor_cmd->add_option("--m", cm, "Also evaluate the m-fold sum");

    auto* corpus_cmd = app.add_subcommand("corpus", "Built-in example sets");
    corpus_cmd->require_subcommand(1);
    corpus_cmd->add_subcommand("list", "List the built-in names");
    auto* show_cmd = corpus_cmd->add_subcommand("show", "Print a built-in machine");
    std::string show_name, show_direction = "msd";
    show_cmd->add_option("name", show_name, "Corpus name")->required();
    show_cmd->add_option("--direction", show_direction, "msd or lsd")
        ->check(CLI::IsMember({"msd", "lsd"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitDecided : kExitUsage;
    }

    try {
        if (classify_cmd->parsed()) {
            Loaded m = load_machine(file, err);
            const Dfa canon = canonicalize(m.machine);
            GrowthReport g = classify(canon);
            KeyValueReport r("classify");
            r.add("input", m.label).add("base", std::uint64_t(canon.base()));
            r.add("state_count", std::uint64_t(canon.size()));
            if (g.polynomial()) {
                r.add("growth", "polynomial");
                r.add("degree", std::uint64_t(std::get<PolynomialGrowth>(g.verdict).degree));
                r.add("sparse", true);
            } else {
                r.add("growth", "exponential");
                r.add("sparse", false);
                add_witness(r, std::get<ExponentialGrowth>(g.verdict).witness);
            }
            emit(r, kv, out);
            return kExitDecided;
        }
        if (gcd_cmd->parsed()) {
            Loaded m = load_machine(file, err);
            GcdReport g = gcd_of_set(m.machine);
            KeyValueReport r("gcd");
            r.add("input", m.label).add("base", std::uint64_t(m.machine.base()));
            r.add("state_count", std::uint64_t(g.state_count));
            r.add("gcd", g.g).add("smallest_member", g.smallest_member);
            r.add("witnesses", g.witnesses);
            emit(r, kv, out);
            return kExitDecided;
        }
        if (basis_cmd->parsed()) {
            Loaded m = load_machine(file, err);
            BasisOptions options;
            options.max_order = max_order;
            options.kind = exact_flag ? BasisKind::Exact : BasisKind::Asymptotic;
            options.sum_mode = parse_mode(basis_mode);
            BasisReport b = decide_basis(m.machine, options);
            KeyValueReport r("basis");
            r.add("input", m.label).add("base", std::uint64_t(m.machine.base()));
            r.add("kind", b.kind == BasisKind::Exact ? "exact" : "asymptotic");
            r.add("mode", b.sum_mode == SumMode::Exact ? "exact-sum" : "atmost");
            r.add("state_count", std::uint64_t(b.state_count));
            r.add("sparse", b.sparse);
            r.add("gcd", b.gcd);
            r.add("contains_one", b.contains_one);
            r.add("asymptotic_basis", b.asymptotic_basis);
            r.add("exact_basis", b.exact_basis);
            r.add("reason", reason_name(b.reason));
            r.add("inconclusive", b.inconclusive);
            r.add("searched_up_to", std::uint64_t(b.searched_up_to));
            if (b.minimal_order) {
                r.add("order", std::uint64_t(*b.minimal_order));
                // Sums of exactly j members are listed when that list is finite.
                if (b.exact_exceptions) {
                    r.add("exceptions_convention", "exact-sum");
                    r.add("exceptions", *b.exact_exceptions);
                } else {
                    r.add("exceptions_convention", "atmost");
                    r.add("exceptions", b.exceptions);
                }
                r.add("exceptions_atmost", b.exceptions);
                r.add("zero_by_empty_sum", b.zero_by_empty_sum);
                r.add("threshold", b.threshold);
            }
            r.add("theoretical_order", b.theoretical_order);
            r.add("theoretical_threshold", b.theoretical_threshold);
            emit(r, kv, out);
            return b.inconclusive ? kExitInconclusive : kExitDecided;
        }
        if (exc_cmd->parsed()) {
            Loaded m = load_machine(file, err);
            const unsigned k = m.machine.base();
            Dfa tgt = load_target(target, k, err);
            SumSpec spec = SumSpec::homogeneous(canonicalize(m.machine), order, parse_mode(exc_mode));
            ExceptionResult res = exceptions_relative(sum_automaton(spec), tgt);
            KeyValueReport r("exceptions");
            r.add("input", m.label).add("base", std::uint64_t(k));
            r.add("order", std::uint64_t(order));
            r.add("mode", exc_mode).add("target", target);
            if (auto* list = std::get_if<std::vector<BigNat>>(&res)) {
                r.add("finite", true);
                r.add("count", std::uint64_t(list->size()));
                r.add("exceptions", *list);
            } else {
                const auto& w = std::get<InfiniteWitness>(res);
                BigNat bound = parse_nat(bound_text);
                const Dfa missing =
                    minimize(difference(canonicalize(tgt), sum_automaton(spec)));
                r.add("finite", false);
                r.add("witness_prefix", word_to_string(w.prefix));
                r.add("witness_cycle", word_to_string(w.cycle));
                r.add("witness_suffix", word_to_string(w.suffix));
                r.add("witness_digit_order", "lsd");
                std::vector<BigNat> pumped;
                for (unsigned i = 0; i < 6; ++i)
                    pumped.push_back(w.pumped(i));
                r.add("witness_pumped", pumped);
                r.add("bound", bound);
                r.add("exceptions_upto_bound", set_members(missing, bound));
            }
            emit(r, kv, out);
            return kExitDecided;
        }
        if (count_cmd->parsed()) {
            SumSpec spec;
            spec.distinct = distinct;
            std::vector<std::string> labels;
            if (!summands.empty()) {
                if (summands.size() != count_order)
                    throw InputError("--summands lists " + std::to_string(summands.size()) +
                                     " sets but --order is " + std::to_string(count_order));
                for (const std::string& s : summands) {
                    Loaded l = load_machine(s, err);
                    spec.summands.push_back(canonicalize(l.machine));
                    labels.push_back(l.label);
                }
            } else {
                if (count_file.empty())
                    throw InputError("count needs a file or --summands");
                Loaded l = load_machine(count_file, err);
                spec = SumSpec::homogeneous(canonicalize(l.machine), count_order, SumMode::Exact,
                                            distinct);
                labels.assign(count_order, l.label);
            }
            BigNat n = parse_nat(n_text);
            KeyValueReport r("count");
            std::string joined;
            for (const std::string& l : labels)
                joined += (joined.empty() ? "" : ",") + l;
            r.add("summands", joined);
            r.add("order", std::uint64_t(count_order));
            r.add("distinct", distinct);
            r.add("n", n);
            r.add("representations", count_representations(n, spec));
            emit(r, kv, out);
            return kExitDecided;
        }
        if (synd_cmd->parsed()) {
            Loaded m = load_machine(file, err);
            SyndeticReport s = check_syndetic(m.machine, gap, parse_nat(bound_text));
            KeyValueReport r("syndetic");
            r.add("input", m.label).add("c", std::uint64_t(gap));
            r.add("holds", s.holds);
            r.add("violations", s.violations);
            emit(r, kv, out);
            return kExitDecided;
        }
        if (run_cmd->parsed()) {
            Loaded m = load_machine(file, err);
            auto found = find_consecutive_run(m.machine, run_len);
            KeyValueReport r("run");
            r.add("input", m.label).add("c", std::uint64_t(run_len));
            r.add("found", found.has_value());
            if (found)
                r.add("start", *found);
            emit(r, kv, out);
            return kExitDecided;
        }
        if (cantor_cmd->parsed()) {
            std::optional<Word> v;
            if (!cv.empty())
                v = parse_word(cv, ck, "--v");
            CantorParams p = cantor_params(ck, parse_word(cu, ck, "--u"), parse_word(cy, ck, "--y"),
                                           parse_word(cz, ck, "--z"), v);
            KeyValueReport r("cantor");
            r.add("k", std::uint64_t(p.k));
            r.add("u", word_to_string(p.u)).add("y", word_to_string(p.y)).add("z", word_to_string(p.z));
            r.add("swapped", p.swapped);
            r.add("L", std::uint64_t(p.L)).add("s", std::uint64_t(p.s));
            if (p.v)
                r.add("v", word_to_string(*p.v)).add("K", std::uint64_t(p.K));
            r.add("Y", to_string(p.Y)).add("Z", to_string(p.Z)).add("U", to_string(p.U));
            r.add("alpha", to_string(p.alpha)).add("beta", to_string(p.beta));
            r.add("overlap_threshold", overlap_threshold(p));
            r.add("overlap_bound", BigNat(pow_nat(p.k, p.L + p.s) + pow_nat(p.k, p.s)));
            r.add("t", std::uint64_t(ct));
            r.add("summand_bound", summand_count_bound(p, ct));
            if (cm > 0) {
                MfoldResult mf = mfold_interval(p, cm);
                r.add("m", std::uint64_t(cm));
                if (auto* iv = std::get_if<Interval>(&mf)) {
                    r.add("mfold", "interval");
                    r.add("mfold_lo", to_string(iv->lo)).add("mfold_hi", to_string(iv->hi));
                } else if (auto* gap_found = std::get_if<NotInterval>(&mf)) {
                    r.add("mfold", "gap");
                    r.add("gap_lo", to_string(gap_found->gap.lo));
                    r.add("gap_hi", to_string(gap_found->gap.hi));
                    r.add("gap_depth", std::uint64_t(gap_found->depth));
                } else {
                    r.add("mfold", "inconclusive");
                    r.add("searched_depth",
                          std::uint64_t(std::get<Inconclusive>(mf).searched_depth));
                }
            }
            emit(r, kv, out);
            return kExitDecided;
        }
        if (corpus_cmd->parsed()) {
            if (show_cmd->parsed()) {
                CorpusEntry e = corpus_entry(show_name);
                out << "# " << e.name << ": " << e.description << '\n';
                out << render_automaton(e.machine,
                                        show_direction == "lsd" ? Direction::Lsd : Direction::Msd);
            } else {
                for (const std::string& name : corpus_names())
                    out << name << '\n';
            }
            return kExitDecided;
        }
    } catch (const ResourceError& e) {
        err << "error: resource limit: " << e.what() << '\n';
        return kExitPrecondition;
    } catch (const PreconditionError& e) {
        err << "error: precondition: " << e.what() << '\n';
        return kExitPrecondition;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace autobasis

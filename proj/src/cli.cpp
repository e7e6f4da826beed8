#include "fibtree/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fibtree/asymptotics.hpp"
#include "fibtree/counting.hpp"
#include "fibtree/oracle.hpp"
#include "fibtree/pair_chain.hpp"
#include "fibtree/walk_prob.hpp"

namespace fibtree::cli {

namespace {

using Row = std::vector<std::string>;

struct Record {
    std::string command;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::vector<std::string> columns;
    std::vector<Row> rows;
};

void emit(const Record& r, const std::string& format, std::ostream& out)
{
    if (format == "json") {
        nlohmann::ordered_json j;
        j["command"] = r.command;
        j["parameters"] = nlohmann::ordered_json::object();
        for (const auto& [k, v] : r.parameters) {
            j["parameters"][k] = v;
        }
        j["rows"] = nlohmann::ordered_json::array();
        for (const Row& row : r.rows) {
            nlohmann::ordered_json o = nlohmann::ordered_json::object();
            for (std::size_t i = 0; i < r.columns.size(); ++i) {
                o[r.columns[i]] = row[i];
            }
            j["rows"].push_back(std::move(o));
        }
        out << j.dump(2) << '\n';
        return;
    }
    auto line = [&](const Row& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            out << (i ? "," : "") << cells[i];
        }
        out << '\n';
    };
    line(r.columns);
    for (const Row& row : r.rows) {
        line(row);
    }
}

std::string str(const BigInt& v) { return v.get_str(); }

template <typename T>
std::string str(const T& v)
{
    return std::to_string(v);
}

std::string real(double v)
{
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

std::string pair_str(Pair p) { return std::to_string(p.a) + "/" + std::to_string(p.b); }

template <typename It, typename F>
std::string joined(It first, It last, F f)
{
    std::string s;
    for (It it = first; it != last; ++it) {
        if (!s.empty()) {
            s += ';';
        }
        s += f(*it);
    }
    return s;
}

// Sequences backed by an optional cache file; written back if it grew.
class SequenceStore {
public:
    SequenceStore(std::string path, std::ostream& err) : path_(std::move(path))
    {
        if (path_.empty()) {
            return;
        }
        std::ifstream in(path_, std::ios::binary);
        if (!in) {
            return;
        }
        try {
            seqs_ = Sequences::load(in);
            loaded_ = seqs_.computed_A11();
        } catch (const std::exception& e) {
            err << "warning: ignoring cache " << path_ << ": " << e.what() << '\n';
            seqs_ = Sequences();
        }
    }

    Sequences& get() { return seqs_; }

    void flush(std::ostream& err)
    {
        if (path_.empty() || seqs_.computed_A11() <= loaded_) {
            return;
        }
        std::ofstream out(path_, std::ios::binary | std::ios::trunc);
        if (out) {
            seqs_.save(out);
        }
        if (!out) {
            err << "warning: could not write cache " << path_ << '\n';
        }
    }

private:
    std::string path_;
    Sequences seqs_;
    std::size_t loaded_ = 0;
};

struct Globals {
    std::string format = "csv";
    unsigned depth_cap = Oracle::kDefaultDepthCap;
    long precision_cap = 4096;
    std::string cache;
    std::uint64_t seed = 42;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Pair coprime_pair(Value a, Value b)
{
    Pair p{a, b};
    if (!is_coprime(p) || a == 0 || b == 0) {
        throw UsageError("pair must be coprime with positive entries");
    }
    return p;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact counts and certified bounds for the random Fibonacci tree rooted at (1,1)", "fibtree"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--depth-cap", g.depth_cap, "Longest walk the brute-force oracle enumerates")
        ->envname("FIBTREE_DEPTH_CAP")
        ->check(CLI::Range(1u, 40u));
    app.add_option("--precision-cap", g.precision_cap, "Largest MPFR precision in bits")
        ->envname("FIBTREE_PRECISION_CAP")
        ->check(CLI::Range(64L, 1L << 20));
    app.add_option("--cache", g.cache, "Sequence cache file")->envname("FIBTREE_CACHE");
    app.add_option("--seed", g.seed, "Seed for simulations");

    // seq
    std::string seq_name;
    std::size_t seq_from = 0;
    std::size_t seq_to = 0;
    std::optional<unsigned> seq_k;
    auto* seq = app.add_subcommand("seq", "Exact sequence values");
    seq->add_option("name", seq_name)->required()->check(CLI::IsMember({"S", "B", "A11", "D", "Ak"}));
    seq->add_option("from", seq_from)->required();
    seq->add_option("to", seq_to)->required();
    seq->add_option("-k,--k", seq_k, "Shortest-walk length, for Ak");

    // count
    Value count_a = 0;
    Value count_b = 0;
    std::size_t count_n = 0;
    bool count_oracle = false;
    auto* count = app.add_subcommand("count", "Occurrences of (a,b) at depth 3n+m");
    count->add_option("a", count_a)->required();
    count->add_option("b", count_b)->required();
    count->add_option("n", count_n)->required();
    count->add_flag("--oracle", count_oracle, "Also count by enumeration");

    // sw
    Value sw_a = 0;
    Value sw_b = 0;
    auto* sw = app.add_subcommand("sw", "Shortest walk from the root to (a,b)");
    sw->add_option("a", sw_a)->required();
    sw->add_option("b", sw_b)->required();

    // certify
    std::string cert_id;
    std::optional<long> cert_from;
    std::optional<long> cert_to;
    auto* cert = app.add_subcommand("certify", "Interval certification of a bound family");
    cert->add_option("id", cert_id)->required()->check(CLI::IsMember(certificate_ids()));
    cert->add_option("from", cert_from);
    cert->add_option("to", cert_to);

    // walkprob
    double wp_p = 0;
    std::vector<std::uint64_t> wp_sim;
    auto* wp = app.add_subcommand("walkprob", "Escape probability of a p-biased walk");
    wp->add_option("p", wp_p)->required();
    wp->add_option("--simulate", wp_sim, "TRIALS HORIZON [SEED]")->expected(2, 3);

    // oracle
    unsigned oracle_n = 8;
    std::optional<unsigned> oracle_pairs;
    auto* orc = app.add_subcommand("oracle", "Cross-check counts against brute-force enumeration");
    orc->add_option("n", oracle_n, "Largest n for A11, B and S")->capture_default_str();
    orc->add_option("--pairs", oracle_pairs, "Instead check every pair with shortest walk <= K at every depth");

    // identities
    std::string id_name;
    std::size_t id_from = 0;
    std::size_t id_to = 300;
    auto* ids = app.add_subcommand("identities", "Exact identities between the sequences");
    ids->add_option("from", id_from)->capture_default_str();
    ids->add_option("to", id_to)->capture_default_str();
    ids->add_option("--name", id_name)->check(CLI::IsMember(identity_names()));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    int status = kOk;
    try {
        SequenceStore store(g.cache, err);
        Sequences& seqs = store.get();
        Record rec;

        if (*seq) {
            if (seq_from > seq_to) {
                throw UsageError("seq: from must not exceed to");
            }
            if ((seq_name == "Ak") != seq_k.has_value()) {
                throw UsageError("seq: --k is required for Ak and only for Ak");
            }
            rec.command = "seq";
            rec.parameters = {{"name", seq_name}, {"from", str(seq_from)}, {"to", str(seq_to)}};
            if (seq_k) {
                rec.parameters.emplace_back("k", str(*seq_k));
            }
            rec.columns = {"name", "n", "value"};
            const std::string label = seq_k ? "A" + std::to_string(*seq_k) : seq_name;
            for (std::size_t n = seq_from; n <= seq_to; ++n) {
                const BigInt& v = seq_name == "S"     ? seqs.S(n)
                                  : seq_name == "B"   ? seqs.B(n)
                                  : seq_name == "A11" ? seqs.A11(n)
                                  : seq_name == "D"   ? seqs.D(n)
                                                      : seqs.Ak(*seq_k, n);
                rec.rows.push_back({label, str(n), str(v)});
            }
        } else if (*count) {
            const Pair p = coprime_pair(count_a, count_b);
            const unsigned k = shortest_walk_length(p);
            const std::size_t depth = 3 * count_n + parity_class(p).m;
            const BigInt& v = count_pair(seqs, p, count_n);
            rec.command = "count";
            rec.parameters = {{"a", str(p.a)}, {"b", str(p.b)}, {"n", str(count_n)}};
            rec.columns = {"a", "b", "n", "k", "depth", "count"};
            Row row{str(p.a), str(p.b), str(count_n), str(k), str(depth), str(v)};
            if (count_oracle) {
                rec.parameters.emplace_back("oracle", "true");
                const std::uint64_t o = Oracle(g.depth_cap).count(p, static_cast<unsigned>(count_n));
                const bool agree = v == mpz_class(str(o));
                rec.columns.insert(rec.columns.end(), {"oracle", "agree"});
                row.insert(row.end(), {str(o), agree ? "true" : "false"});
                if (!agree) {
                    status = kOracleDisagreement;
                }
            }
            rec.rows.push_back(std::move(row));
        } else if (*sw) {
            const Pair p = coprime_pair(sw_a, sw_b);
            const ReductionChain chain = reduction_chain(p);
            const std::vector<Value> nodes = chain.forward_nodes();
            rec.command = "sw";
            rec.parameters = {{"a", str(p.a)}, {"b", str(p.b)}};
            rec.columns = {"a", "b", "k", "walk", "chain", "nodes"};
            std::string walk = chain.forward_walk().to_string();
            rec.rows.push_back({str(p.a), str(p.b), str(chain.length), walk.empty() ? "-" : walk,
                                joined(chain.pairs.begin(), chain.pairs.end(), pair_str),
                                joined(nodes.begin(), nodes.end(), [](Value v) { return std::to_string(v); })});
        } else if (*cert) {
            const long from = cert_from.value_or(certificate_min_index(cert_id));
            const long to = cert_to.value_or(from);
            CertifyOptions opts;
            opts.precision_cap = g.precision_cap;
            rec.command = "certify";
            rec.parameters = {{"id", cert_id}, {"from", str(from)}, {"to", str(to)},
                              {"precision_cap", str(g.precision_cap)}};
            rec.columns = {"id", "n", "verdict", "precision", "lhs_lo", "lhs_hi", "rhs_lo", "rhs_hi"};
            for (const BoundCertificate& c : certify(seqs, cert_id, from, to, opts)) {
                rec.rows.push_back({c.id, str(c.n), std::string(to_string(c.verdict)), str(c.precision),
                                    c.lhs.lower_string(), c.lhs.upper_string(), c.rhs.lower_string(),
                                    c.rhs.upper_string()});
                if (c.verdict == Verdict::Fails) {
                    status = kCertificationFailure;
                }
            }
        } else if (*wp) {
            rec.command = "walkprob";
            rec.parameters = {{"p", real(wp_p)}};
            rec.columns = {"p", "escape", "r1", "absorption_2"};
            Row row{real(wp_p), real(escape_probability(wp_p)), real(hitting_root(wp_p)),
                    real(absorption_P(2, wp_p))};
            if (!wp_sim.empty()) {
                WalkProbParams params{wp_p, wp_sim[0], wp_sim[1], wp_sim.size() == 3 ? wp_sim[2] : g.seed};
                const EscapeEstimate e = simulate_escape(params);
                rec.parameters.insert(rec.parameters.end(),
                                      {{"trials", str(e.trials)}, {"horizon", str(e.horizon)}, {"seed", str(e.seed)}});
                rec.columns.insert(rec.columns.end(), {"estimate", "half_width", "trials", "horizon", "seed", "rng"});
                row.insert(row.end(), {real(e.estimate), real(e.half_width), str(e.trials), str(e.horizon),
                                       str(e.seed), e.rng});
            }
            rec.rows.push_back(std::move(row));
        } else if (*orc) {
            const Oracle oracle(g.depth_cap);
            rec.command = "oracle";
            rec.parameters = {{"depth_cap", str(g.depth_cap)}};
            if (oracle_pairs) {
                rec.parameters.emplace_back("pairs", str(*oracle_pairs));
                rec.columns = {"a", "b", "k", "n", "count", "oracle", "agree"};
                std::vector<Occurrence> pairs = restricted_tree(*oracle_pairs);
                Value bound = 1;
                for (const Occurrence& o : pairs) {
                    bound = std::max({bound, o.pair.a, o.pair.b});
                }
                const OccurrenceTable table = oracle.tally(g.depth_cap, bound);
                for (const Occurrence& o : pairs) {
                    if (o.pair.a == 0 || o.pair.b == 0) {
                        continue;
                    }
                    const unsigned m = parity_class(o.pair).m;
                    for (unsigned n = 0; 3 * n + m <= g.depth_cap; ++n) {
                        const std::uint64_t want = table.at(o.pair, 3 * n + m);
                        const BigInt& got = count_pair(seqs, o.pair, n);
                        const bool agree = got == mpz_class(str(want));
                        rec.rows.push_back({str(o.pair.a), str(o.pair.b), str(o.depth), str(n), str(got), str(want),
                                            agree ? "true" : "false"});
                        if (!agree) {
                            status = kOracleDisagreement;
                        }
                    }
                }
            } else {
                rec.parameters.emplace_back("n", str(oracle_n));
                rec.columns = {"name", "n", "recurrence", "oracle", "agree"};
                const std::pair<const char*, Constraint> kinds[] = {
                    {"A11", Constraint::Unconstrained}, {"B", Constraint::ZeroAvoiding}, {"S", Constraint::Primitive}};
                for (const auto& [name, constraint] : kinds) {
                    for (unsigned n = 0; n <= oracle_n; ++n) {
                        const std::string_view nm = name;
                        const BigInt& v = nm == "A11" ? seqs.A11(n) : nm == "B" ? seqs.B(n) : seqs.S(n);
                        const std::uint64_t o = oracle.count_constrained(n, constraint);
                        const bool agree = v == mpz_class(str(o));
                        rec.rows.push_back({name, str(n), str(v), str(o), agree ? "true" : "false"});
                        if (!agree) {
                            status = kOracleDisagreement;
                        }
                    }
                }
            }
        } else if (*ids) {
            if (id_from > id_to) {
                throw UsageError("identities: from must not exceed to");
            }
            rec.command = "identities";
            rec.parameters = {{"from", str(id_from)}, {"to", str(id_to)}};
            if (!id_name.empty()) {
                rec.parameters.emplace_back("name", id_name);
            }
            rec.columns = {"identity", "n", "holds"};
            std::vector<std::string> names = id_name.empty() ? identity_names() : std::vector<std::string>{id_name};
            for (const std::string& name : names) {
                for (std::size_t n = std::max(id_from, identity_min_index(name)); n <= id_to; ++n) {
                    const bool ok = check_identity(seqs, name, n);
                    rec.rows.push_back({name, str(n), ok ? "true" : "false"});
                    if (!ok) {
                        status = kCertificationFailure;
                    }
                }
            }
        }

        emit(rec, g.format, out);
        store.flush(err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::range_error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return status;
}

}  // namespace fibtree::cli

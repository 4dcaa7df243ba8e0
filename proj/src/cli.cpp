/*
   Copyright 2026 The avc authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "avc/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

#include "avc/json_io.hpp"
#include "avc/listdec.hpp"
#include "avc/rng.hpp"
#include "avc/zbounds.hpp"

namespace avc::cli {

namespace {

std::vector<int> parse_ints(const std::string& s, char sep = ',') {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, sep)) {
        size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("bad integer list \"" + s + "\"");
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty integer list");
    return out;
}

GridShape parse_shape(const std::string& s) { return GridShape(parse_ints(s)); }

BoundMethod parse_method(const std::string& s) {
    for (BoundMethod m : {BoundMethod::RecursiveD, BoundMethod::ClosedFormC,
                          BoundMethod::SchwartzZippel, BoundMethod::Footprint})
        if (s == bound_method_name(m)) return m;
    throw std::invalid_argument("unknown method \"" + s +
                                "\" (expected recursive|closed|sz|footprint)");
}

ordered_json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return ordered_json::parse(in);
}

/// Mini-grammar: total:U | weighted:w1,...,wm:U | box:k1,...,km[:rev] |
/// explicit:@file.json
MonomialFamily parse_family(const std::string& spec, const GridShape& shape) {
    size_t colon = spec.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("family spec needs a type prefix, e.g. total:3");
    const std::string type = spec.substr(0, colon);
    const std::string rest = spec.substr(colon + 1);
    if (type == "total") return MonomialFamily::total_degree(std::stoi(rest), shape);
    if (type == "weighted") {
        size_t c2 = rest.rfind(':');
        if (c2 == std::string::npos)
            throw std::invalid_argument("weighted spec is weighted:w1,...,wm:U");
        return MonomialFamily::weighted(parse_ints(rest.substr(0, c2)),
                                        std::stoi(rest.substr(c2 + 1)), shape);
    }
    if (type == "box") {
        std::string nums = rest;
        bool rev = false;
        if (nums.size() > 4 && nums.substr(nums.size() - 4) == ":rev") {
            rev = true;
            nums = nums.substr(0, nums.size() - 4);
        }
        auto bounds = parse_ints(nums);
        if (rev) std::reverse(bounds.begin(), bounds.end());
        return MonomialFamily::box(bounds, shape);
    }
    if (type == "explicit") {
        if (rest.empty() || rest[0] != '@')
            throw std::invalid_argument("explicit spec is explicit:@file.json");
        return family_from_json(load_json_file(rest.substr(1)), shape);
    }
    throw std::invalid_argument("unknown family type \"" + type + "\"");
}

std::vector<std::vector<int>> parse_sets(const std::string& spec, const Field& f) {
    std::vector<std::vector<int>> sets;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ';')) {
        if (tok == "full") {
            std::vector<int> full(f.q());
            for (int v = 0; v < f.q(); ++v) full[v] = v;
            sets.push_back(std::move(full));
        } else if (tok.rfind("first:", 0) == 0) {
            int k = std::stoi(tok.substr(6));
            if (k < 1 || k > f.q()) throw std::invalid_argument("first:k out of range");
            std::vector<int> s(k);
            for (int v = 0; v < k; ++v) s[v] = v;
            sets.push_back(std::move(s));
        } else {
            sets.push_back(parse_ints(tok));
        }
    }
    if (sets.empty()) throw std::invalid_argument("empty sets spec");
    return sets;
}

struct CodeArgs {
    std::string code_file;
    std::string field;
    std::string sets;
    std::string family;

    Code build() const {
        if (!code_file.empty()) return code_from_json(load_json_file(code_file));
        if (field.empty() || sets.empty() || family.empty())
            throw std::invalid_argument("need --code or all of --field/--sets/--family");
        Field f = Field::parse(field);
        PointEnsemble ens(f, parse_sets(sets, f));
        MonomialFamily fam = parse_family(family, ens.shape());
        return Code(std::move(ens), std::move(fam));
    }

    void attach(CLI::App* cmd) {
        cmd->add_option("--code", code_file, "code spec JSON file");
        cmd->add_option("--field", field, "field spec p,e");
        cmd->add_option("--sets", sets, "semicolon-separated sets: full|first:k|v1,v2,...");
        cmd->add_option("--family", family, "family spec (total:U|weighted:...|box:...|explicit:@f)");
    }
};

std::vector<int> parse_received(const std::string& spec) {
    if (!spec.empty() && spec[0] == '@') return word_from_json(load_json_file(spec.substr(1)));
    return parse_ints(spec);
}

ordered_json record(const std::string& cmd, ordered_json inputs, ordered_json result) {
    ordered_json out;
    out["cmd"] = cmd;
    out["inputs"] = std::move(inputs);
    out["result"] = std::move(result);
    return out;
}

void emit(std::ostream& os, const std::string& format, const std::string& plain,
          const ordered_json& rec) {
    if (format == "json")
        os << rec.dump() << "\n";
    else
        os << plain << "\n";
}

int run_impl(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"affine variety codes on product point sets: bounds, radii, list decoding"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "output format: text|json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    // bound
    auto* cmd_bound = app.add_subcommand("bound", "zero-of-multiplicity bound for one monomial");
    std::string b_i, b_shape, b_method = "recursive";
    int b_r = 1;
    cmd_bound->add_option("--i", b_i, "exponents i1,...,im")->required();
    cmd_bound->add_option("--shape", b_shape, "grid sizes s1,...,sm")->required();
    cmd_bound->add_option("--r", b_r, "multiplicity")->required();
    cmd_bound->add_option("--method", b_method, "recursive|closed|sz|footprint");

    // table
    auto* cmd_table = app.add_subcommand("table", "improvement statistics on uniform grids");
    std::string t_which, t_mean_sz = "scaled";
    int t_m = 0, t_q = 0, t_r = 0, t_decimals = 3;
    bool t_all = false;
    cmd_table->add_option("--which", t_which, "max|mean")->required();
    cmd_table->add_option("--m", t_m, "number of variables");
    cmd_table->add_option("--q", t_q, "uniform set size");
    cmd_table->add_option("--r", t_r, "multiplicity");
    cmd_table->add_flag("--all", t_all, "emit the whole grid as CSV");
    cmd_table->add_option("--mean-sz", t_mean_sz,
                          "scaled|printed reference term for the mean statistic");
    cmd_table->add_option("--decimals", t_decimals, "truncation digits");

    // code-info
    auto* cmd_info = app.add_subcommand("code-info", "length, dimension, distance bound, border");
    CodeArgs info_args;
    info_args.attach(cmd_info);

    // radius
    auto* cmd_radius = app.add_subcommand("radius", "maximal list-decoding radius");
    std::string r_shape, r_family, r_method = "recursive";
    int r_r = 2;
    cmd_radius->add_option("--shape", r_shape, "grid sizes s1,...,sm")->required();
    cmd_radius->add_option("--family", r_family, "family spec")->required();
    cmd_radius->add_option("--r", r_r, "multiplicity")->required();
    cmd_radius->add_option("--method", r_method, "recursive|closed|sz");

    // plan
    auto* cmd_plan = app.add_subcommand("plan", "preparation step: coefficient supports");
    std::string p_shape, p_family, p_method = "recursive", p_out;
    int p_r = 2;
    long long p_E = 0;
    cmd_plan->add_option("--shape", p_shape, "grid sizes")->required();
    cmd_plan->add_option("--family", p_family, "family spec")->required();
    cmd_plan->add_option("--r", p_r, "multiplicity")->required();
    cmd_plan->add_option("--E", p_E, "target error count")->required();
    cmd_plan->add_option("--method", p_method, "recursive|closed|sz");
    cmd_plan->add_option("--out", p_out, "write the plan JSON here instead of stdout");

    // decode
    auto* cmd_decode = app.add_subcommand("decode", "list-decode one received word");
    CodeArgs dec_args;
    dec_args.attach(cmd_decode);
    std::string d_plan, d_received;
    long long d_cap = 4096;
    cmd_decode->add_option("--plan", d_plan, "plan JSON file")->required();
    cmd_decode->add_option("--received", d_received, "word v1,...,vn or @file.json")->required();
    cmd_decode->add_option("--cap", d_cap, "list size cap");

    // simulate
    auto* cmd_sim = app.add_subcommand("simulate", "random-error decoding trials");
    CodeArgs sim_args;
    sim_args.attach(cmd_sim);
    int s_r = 2;
    long long s_E = -1, s_trials = 100;
    uint64_t s_seed = 1;
    std::string s_method = "recursive";
    bool s_force = false;
    long long s_cap = 4096;
    cmd_sim->add_option("--r", s_r, "multiplicity")->required();
    cmd_sim->add_option("--E", s_E, "error count (default: the maximal radius)");
    cmd_sim->add_option("--method", s_method, "recursive|closed|sz");
    cmd_sim->add_option("--trials", s_trials, "number of trials");
    cmd_sim->add_option("--seed", s_seed, "RNG seed (splitmix64)");
    cmd_sim->add_flag("--force", s_force, "attempt E beyond the maximal radius");
    cmd_sim->add_option("--cap", s_cap, "list size cap");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    if (*cmd_bound) {
        GridShape shape = parse_shape(b_shape);
        Monomial mono(parse_ints(b_i));
        DTable dtable(shape);
        Rational v = dzero(mono, b_r, shape, parse_method(b_method), dtable);
        emit(out, format, v.str(),
             record("bound",
                    {{"i", mono.exps}, {"shape", shape.sizes}, {"r", b_r}, {"method", b_method}},
                    v.str()));
        return 0;
    }

    if (*cmd_table) {
        StatKind kind;
        if (t_which == "max")
            kind = StatKind::Max;
        else if (t_which == "mean")
            kind = StatKind::Mean;
        else
            throw std::invalid_argument("--which must be max or mean");
        MeanSzVariant variant;
        if (t_mean_sz == "scaled")
            variant = MeanSzVariant::Scaled;
        else if (t_mean_sz == "printed")
            variant = MeanSzVariant::Unscaled;
        else
            throw std::invalid_argument("--mean-sz must be scaled or printed");
        if (t_all) {
            out << "m,r,q,value\n";
            for (int m : {2, 3, 4})
                for (int r : (m == 4 ? std::vector<int>{2, 3} : std::vector<int>{2, 3, 4, 5}))
                    for (int q : {2, 3, 4, 5, 7, 8})
                        out << m << "," << r << "," << q << ","
                            << improvement_stat(m, q, r, kind, variant, t_decimals) << "\n";
            return 0;
        }
        if (t_m < 1 || t_q < 2 || t_r < 1)
            throw std::invalid_argument("single cell needs --m, --q, --r");
        std::string v = improvement_stat(t_m, t_q, t_r, kind, variant, t_decimals);
        emit(out, format, v,
             record("table",
                    {{"which", t_which}, {"m", t_m}, {"q", t_q}, {"r", t_r}, {"mean_sz", t_mean_sz}},
                    v));
        return 0;
    }

    if (*cmd_info) {
        Code code = info_args.build();
        ordered_json border = ordered_json::array();
        for (const auto& m : code.family().border()) border.push_back(m.exps);
        long long d = code.dmin_bound();
        ordered_json result{{"n", code.n()},
                            {"dim", code.dim()},
                            {"dmin_bound", d},
                            {"half_distance", (d - 1) / 2},
                            {"divisor_closed", code.family().divisor_closed()},
                            {"border", border}};
        if (format == "json") {
            out << record("code-info", code_to_json(code), result).dump() << "\n";
        } else {
            out << "n " << code.n() << "\ndim " << code.dim() << "\ndmin_bound " << d
                << "\nhalf_distance " << (d - 1) / 2 << "\ndivisor_closed "
                << (code.family().divisor_closed() ? "yes" : "no") << "\nborder";
            for (const auto& m : code.family().border()) out << " " << m.str();
            out << "\n";
        }
        return 0;
    }

    if (*cmd_radius) {
        GridShape shape = parse_shape(r_shape);
        MonomialFamily fam = parse_family(r_family, shape);
        DTable dtable(shape);
        auto e = max_radius(r_r, shape, fam, parse_method(r_method), dtable);
        std::string plain = e ? std::to_string(*e) : "none";
        ordered_json res = e ? ordered_json(*e) : ordered_json(nullptr);
        emit(out, format, plain,
             record("radius",
                    {{"shape", shape.sizes}, {"family", r_family}, {"r", r_r},
                     {"method", r_method}},
                    res));
        return 0;
    }

    if (*cmd_plan) {
        GridShape shape = parse_shape(p_shape);
        MonomialFamily fam = parse_family(p_family, shape);
        DTable dtable(shape);
        DecoderPlan pl = plan(p_r, p_E, shape, fam, parse_method(p_method), dtable);
        ordered_json j = plan_to_json(pl);
        if (p_out.empty()) {
            out << j.dump() << "\n";
        } else {
            std::ofstream f(p_out);
            if (!f) throw std::invalid_argument("cannot write " + p_out);
            f << j.dump() << "\n";
            out << "t " << pl.t << " supports " << pl.support_count() << "\n";
        }
        return 0;
    }

    if (*cmd_decode) {
        Code code = dec_args.build();
        DecoderPlan pl = plan_from_json(load_json_file(d_plan));
        std::vector<int> received = parse_received(d_received);
        DecodeOutput res = decode(code, pl, received, d_cap);
        ordered_json items = ordered_json::array();
        for (const auto& item : res.items)
            items.push_back({{"poly", mpoly_to_json(item.message_poly)},
                             {"codeword", item.codeword},
                             {"distance", item.distance}});
        out << record("decode", {{"E", pl.E}, {"r", pl.r}, {"n", code.n()}}, items).dump() << "\n";
        return 0;
    }

    if (*cmd_sim) {
        Code code = sim_args.build();
        BoundMethod method = parse_method(s_method);
        DTable dtable(code.ensemble().shape());
        auto maxr = max_radius(s_r, code.ensemble().shape(), code.family(), method, dtable);
        long long E = s_E;
        if (E < 0) {
            if (!maxr) fail(ErrorCode::RadiusInfeasible, "no correctable error count exists");
            E = *maxr;
        } else if (!s_force && (!maxr || E > *maxr)) {
            fail(ErrorCode::RadiusInfeasible,
                 "E exceeds the maximal radius " + (maxr ? std::to_string(*maxr) : "none"));
        }
        if (E >= code.n()) fail(ErrorCode::RadiusInfeasible, "E must be below the length");
        DecoderPlan pl = plan(s_r, E, code.ensemble().shape(), code.family(), method, dtable);

        Rng rng(s_seed);
        const Field& f = code.field();
        long long successes = 0, list_total = 0;
        double ms_total = 0;
        for (long long trial = 0; trial < s_trials; ++trial) {
            std::vector<int> msg((size_t)code.dim());
            for (auto& v : msg) v = (int)rng.below((uint64_t)f.q());
            std::vector<int> sent = code.encode(msg);
            std::vector<int> word = sent;
            // E distinct positions, each flipped to a uniformly random wrong value.
            std::vector<long long> positions(code.n());
            for (long long i = 0; i < code.n(); ++i) positions[(size_t)i] = i;
            for (long long i = 0; i < E; ++i) {
                long long j = i + (long long)rng.below((uint64_t)(code.n() - i));
                std::swap(positions[(size_t)i], positions[(size_t)j]);
                long long pos = positions[(size_t)i];
                int wrong = (int)rng.below((uint64_t)(f.q() - 1));
                if (wrong >= word[(size_t)pos]) ++wrong;
                word[(size_t)pos] = wrong;
            }
            auto t0 = std::chrono::steady_clock::now();
            DecodeOutput res = decode(code, pl, word, s_cap);
            ms_total += std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
            list_total += (long long)res.items.size();
            for (const auto& item : res.items)
                if (item.codeword == sent) { ++successes; break; }
        }
        ordered_json result{
            {"trials", s_trials},
            {"successes", successes},
            {"success_rate", Rational(successes, s_trials).truncated(3)},
            {"mean_list_size", Rational(list_total, s_trials).truncated(3)},
            {"E", E},
            {"max_radius", maxr ? ordered_json(*maxr) : ordered_json(nullptr)}};
        err << "mean decode ms " << (ms_total / (double)s_trials) << "\n";
        out << record("simulate",
                      {{"field", f.spec()}, {"r", s_r}, {"method", s_method}, {"E", E},
                       {"trials", s_trials}, {"seed", s_seed}},
                      result)
                   .dump()
            << "\n";
        return 0;
    }

    return 2;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return run_impl(args, out, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace avc::cli

#include "laceq/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "laceq/bijection.hpp"
#include "laceq/identities.hpp"
#include "laceq/json_io.hpp"

namespace laceq {

namespace {

using nlohmann::json;

DimVector parse_dims(const std::string& text) {
    DimVector dims;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t next = text.find(',', pos);
        if (next == std::string::npos) next = text.size();
        int value = 0;
        const char* begin = text.data() + pos;
        const char* end = text.data() + next;
        const auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec != std::errc() || ptr != end || value < 0)
            throw std::invalid_argument("malformed dimension vector: '" + text + "'");
        dims.push_back(value);
        pos = next + 1;
        if (next == text.size()) break;
    }
    if (dims.empty()) throw std::invalid_argument("dimension vector must not be empty");
    return dims;
}

std::string dims_to_string(const DimVector& d) {
    std::string out;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(d[i]);
    }
    return out;
}

// Writes the payload to --out when given, standard output otherwise.
void deliver(const std::string& payload, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << payload;
        return;
    }
    std::ofstream file(out_path);
    if (!file) throw std::invalid_argument("cannot open output file '" + out_path + "'");
    file << payload;
}

struct Weights {
    PermSeq w;
    std::optional<OrientationWord> orientation;
};

// --orientation and --w are mutually exclusive; --orientation implies
// w = w_Q. A path with one vertex needs neither.
Weights resolve_weights(int n, const std::optional<std::string>& orientation_text,
                        const std::optional<std::string>& w_text) {
    if (orientation_text && w_text)
        throw std::invalid_argument("--orientation and --w are mutually exclusive");
    if (orientation_text) {
        OrientationWord q(*orientation_text);
        if (q.n() != n)
            throw std::invalid_argument("orientation word must have length " +
                                        std::to_string(n - 1));
        return Weights{wq(q), q};
    }
    if (w_text) {
        PermSeq w = parse_perm_seq(*w_text);
        if (w.n() != n)
            throw std::invalid_argument("permutation tuple must have " + std::to_string(n) +
                                        " components");
        return Weights{std::move(w), std::nullopt};
    }
    if (n == 1) return Weights{PermSeq::identity(1), OrientationWord("")};
    throw std::invalid_argument("need --orientation or --w");
}

std::vector<std::vector<int>> s_table(const LaceClass& eta) {
    std::vector<std::vector<int>> s;
    for (int k = 1; k <= eta.n; ++k) {
        std::vector<int> row;
        for (int i = 1; i <= k - 1; ++i) row.push_back(s_stat(eta, i, k));
        s.push_back(std::move(row));
    }
    return s;
}

std::vector<std::vector<int>> t_table(const LaceClass& eta) {
    std::vector<std::vector<int>> t;
    for (int k = 1; k <= eta.n; ++k) {
        std::vector<int> row;
        for (int i = 1; i <= k; ++i) row.push_back(t_stat(eta, i, k));
        t.push_back(std::move(row));
    }
    return t;
}

std::string render_table(const std::vector<std::vector<int>>& rows, int first_k) {
    std::string out;
    for (std::size_t idx = 0; idx < rows.size(); ++idx) {
        if (rows[idx].empty()) continue;
        if (!out.empty()) out += " | ";
        out += "k=" + std::to_string(first_k + static_cast<int>(idx)) + ":";
        for (int value : rows[idx]) out += " " + std::to_string(value);
    }
    return out.empty() ? "-" : out;
}

std::string csv_quote(const std::string& text) { return "\"" + text + "\""; }

int cmd_wq(const std::string& orientation_text, const std::string& out_path,
           std::ostream& out) {
    const OrientationWord q(orientation_text);
    deliver(to_string(wq(q)) + "\n", out_path, out);
    return 0;
}

int cmd_laces(const std::string& dims_text, const std::optional<std::string>& orientation_text,
              const std::optional<std::string>& w_text, const std::string& format,
              const std::string& out_path, std::ostream& out) {
    const DimVector dims = parse_dims(dims_text);
    const Weights weights = resolve_weights(static_cast<int>(dims.size()), orientation_text,
                                            w_text);
    const std::vector<LaceClass> classes = enumerate_classes(dims);

    struct Row {
        const LaceClass* eta;
        long long r_w;
        std::optional<long long> codim_cond;
        std::optional<long long> codim_ext;
    };
    std::vector<Row> rows;
    rows.reserve(classes.size());
    for (const LaceClass& eta : classes) {
        Row row{&eta, durfee_statistic(eta, weights.w), std::nullopt, std::nullopt};
        if (weights.orientation) {
            row.codim_cond = codim_condition(*weights.orientation, eta);
            row.codim_ext = codim_oracle(*weights.orientation, eta);
        }
        rows.push_back(row);
    }

    std::ostringstream payload;
    if (format == "json") {
        json body;
        body["dims"] = dims;
        body["orientation"] =
            weights.orientation ? json(weights.orientation->arrows) : json(nullptr);
        body["w"] = to_string(weights.w);
        json class_list = json::array();
        for (const Row& row : rows) {
            json entry;
            entry["strands"] = json(*row.eta)["strands"];
            entry["s"] = s_table(*row.eta);
            entry["t"] = t_table(*row.eta);
            entry["r_w"] = row.r_w;
            entry["codim_condition"] = row.codim_cond ? json(*row.codim_cond) : json(nullptr);
            entry["codim_oracle"] = row.codim_ext ? json(*row.codim_ext) : json(nullptr);
            class_list.push_back(std::move(entry));
        }
        body["classes"] = std::move(class_list);
        payload << body.dump(2) << "\n";
    } else if (format == "csv") {
        payload << "index,strands,r_w,codim_condition,codim_oracle\n";
        for (std::size_t idx = 0; idx < rows.size(); ++idx) {
            payload << (idx + 1) << "," << csv_quote(to_string(*rows[idx].eta)) << ","
                    << rows[idx].r_w << ",";
            if (rows[idx].codim_cond) payload << *rows[idx].codim_cond;
            payload << ",";
            if (rows[idx].codim_ext) payload << *rows[idx].codim_ext;
            payload << "\n";
        }
    } else if (format == "text") {
        payload << "dims: " << dims_to_string(dims) << "\n";
        if (weights.orientation)
            payload << "orientation: " << weights.orientation->arrows << "\n";
        payload << "w: " << to_string(weights.w) << "\n";
        payload << "classes: " << rows.size() << "\n";
        for (std::size_t idx = 0; idx < rows.size(); ++idx) {
            const Row& row = rows[idx];
            payload << "\n#" << (idx + 1) << "  " << to_string(*row.eta) << "\n";
            payload << "    s: " << render_table(s_table(*row.eta), 1) << "\n";
            payload << "    t: " << render_table(t_table(*row.eta), 1) << "\n";
            payload << "    r_w: " << row.r_w;
            if (row.codim_cond)
                payload << "  codim_condition: " << *row.codim_cond
                        << "  codim_oracle: " << *row.codim_ext;
            payload << "\n";
        }
    } else {
        throw std::invalid_argument("unknown format '" + format + "'");
    }
    deliver(payload.str(), out_path, out);
    return 0;
}

int cmd_verify(const std::string& name, const std::string& dims_text,
               const std::optional<std::string>& orientation_text,
               const std::optional<std::string>& w_text, int trunc_q, int trunc_z,
               const std::string& format, const std::string& out_path, std::ostream& out) {
    const DimVector dims = parse_dims(dims_text);
    std::optional<PermSeq> w;
    std::optional<OrientationWord> orientation;
    if (name == "reineke") {
        // verify_identity rejects a bare tuple for reineke; pass arguments through.
        if (orientation_text) orientation = OrientationWord(*orientation_text);
        if (w_text) w = parse_perm_seq(*w_text);
        if (!orientation && !w && dims.size() == 1) orientation = OrientationWord("");
    } else {
        const Weights weights = resolve_weights(static_cast<int>(dims.size()), orientation_text,
                                                w_text);
        w = weights.w;
        orientation = weights.orientation;
        if (orientation) w.reset();  // let the report carry the orientation
    }
    if (orientation && orientation->n() != static_cast<int>(dims.size()))
        throw std::invalid_argument("orientation word must have length " +
                                    std::to_string(dims.size() - 1));

    const IdentityReport report = verify_identity(name, dims, w, orientation, trunc_q, trunc_z);

    std::ostringstream payload;
    if (format == "json") {
        payload << json(report).dump(2) << "\n";
    } else if (format == "csv") {
        payload << "zdeg,qdeg,lhs,rhs,equal\n";
        for (int z = 0; z <= report.lhs.trunc_z(); ++z)
            for (int q = 0; q <= report.lhs.trunc_q(); ++q) {
                const Integer l = coeff(report.lhs, z, q);
                const Integer r = coeff(report.rhs, z, q);
                payload << z << "," << q << "," << to_decimal(l) << "," << to_decimal(r) << ","
                        << (l == r ? "true" : "false") << "\n";
            }
    } else if (format == "text") {
        payload << "identity: " << report.identity << "\n";
        payload << "dims: " << dims_to_string(report.dims) << "\n";
        if (!report.orientation.empty()) payload << "orientation: " << report.orientation << "\n";
        if (!report.w_text.empty()) payload << "w: " << report.w_text << "\n";
        payload << "truncation: q^" << report.trunc_q;
        if (report.trunc_z > 0) payload << ", z^" << report.trunc_z;
        payload << "\nclasses: " << report.class_count << "\n";
        payload << "lhs: " << report.lhs.to_text() << "\n";
        payload << "rhs: " << report.rhs.to_text() << "\n";
        if (report.equal) {
            payload << "result: EQUAL\n";
        } else {
            const auto& m = *report.first_mismatch;
            payload << "result: MISMATCH at z^" << m.zdeg << " q^" << m.qdeg << ": lhs="
                    << to_decimal(m.lhs_coeff) << " rhs=" << to_decimal(m.rhs_coeff) << "\n";
        }
    } else {
        throw std::invalid_argument("unknown format '" + format + "'");
    }
    deliver(payload.str(), out_path, out);
    return report.equal ? 0 : 1;
}

json phi_json(const PhiDetail& detail, const MultiPartition& lambda, const Weights& weights,
              bool roundtrip) {
    json body = json(detail.cut);
    body["lambda"] = json::array();
    for (const Partition& p : lambda.lambdas) body["lambda"].push_back(p.parts);
    body["dims"] = lambda.bound;
    body["w"] = to_string(weights.w);
    if (weights.orientation) body["orientation"] = weights.orientation->arrows;
    json t = json::array(), s = json::array();
    for (std::size_t k = 1; k < detail.t.size(); ++k)
        t.push_back(std::vector<int>(detail.t[k].begin() + 1, detail.t[k].end()));
    for (std::size_t k = 1; k < detail.s.size(); ++k)
        s.push_back(std::vector<int>(detail.s[k].begin() + 1, detail.s[k].end()));
    body["t"] = std::move(t);
    body["s"] = std::move(s);
    json deltas = json::array();
    for (const auto& [key, rect] : detail.deltas)
        deltas.push_back(json{{"i", key.first},
                              {"k", key.second},
                              {"rows", rect.rows},
                              {"cols", rect.cols}});
    body["deltas"] = std::move(deltas);
    body["weight"] = detail.cut.weight();
    body["roundtrip"] = roundtrip;
    return body;
}

int cmd_bijection_phi(const std::string& dims_text,
                      const std::optional<std::string>& orientation_text,
                      const std::optional<std::string>& w_text, const std::string& parts_text,
                      const std::string& format, const std::string& out_path,
                      std::ostream& out) {
    const DimVector dims = parse_dims(dims_text);
    const Weights weights = resolve_weights(static_cast<int>(dims.size()), orientation_text,
                                            w_text);
    const MultiPartition lambda = parse_multipartition(parts_text, dims);
    const PhiDetail detail = phi_detail(lambda, weights.w);
    const bool roundtrip = psi(detail.cut, weights.w) == lambda &&
                           detail.cut.weight() == lambda.weight();

    std::ostringstream payload;
    if (format == "json") {
        payload << phi_json(detail, lambda, weights, roundtrip).dump(2) << "\n";
    } else if (format == "text") {
        payload << "dims: " << dims_to_string(dims) << "\n";
        if (weights.orientation)
            payload << "orientation: " << weights.orientation->arrows << "\n";
        payload << "w: " << to_string(weights.w) << "\n";
        payload << "lambda: " << to_string(lambda) << "\n";
        std::vector<std::vector<int>> t_rows, s_rows;
        for (std::size_t k = 1; k < detail.t.size(); ++k)
            t_rows.push_back(std::vector<int>(detail.t[k].begin() + 1, detail.t[k].end()));
        for (std::size_t k = 1; k < detail.s.size(); ++k)
            s_rows.push_back(std::vector<int>(detail.s[k].begin() + 1, detail.s[k].end()));
        payload << "t: " << render_table(t_rows, 1) << "\n";
        payload << "s: " << render_table(s_rows, 1) << "\n";
        std::string delta_text;
        for (const auto& [key, rect] : detail.deltas) {
            if (!delta_text.empty()) delta_text += " | ";
            delta_text += "(" + std::to_string(key.first) + "," + std::to_string(key.second) +
                          "): " + to_string(rect);
        }
        payload << "delta: " << (delta_text.empty() ? "-" : delta_text) << "\n";
        payload << "eta: " << to_string(detail.cut.eta) << "\n";
        std::string mu_text;
        for (const auto& [key, rect] : detail.cut.mus) {
            if (!mu_text.empty()) mu_text += " | ";
            const auto [i, j, k] = key;
            mu_text += "(" + std::to_string(i) + "," + std::to_string(j) + "," +
                       std::to_string(k) + "): " + to_string(rect);
        }
        payload << "mu: " << (mu_text.empty() ? "-" : mu_text) << "\n";
        std::string nu_text;
        for (const auto& [key, nu] : detail.cut.nus) {
            if (!nu_text.empty()) nu_text += " | ";
            nu_text += "(" + std::to_string(key.first) + "," + std::to_string(key.second) +
                       "): " + to_string(nu);
        }
        payload << "nu: " << (nu_text.empty() ? "-" : nu_text) << "\n";
        payload << "weight: " << detail.cut.weight() << "\n";
        payload << "roundtrip: " << (roundtrip ? "ok" : "FAILED") << "\n";
    } else {
        throw std::invalid_argument("unknown format '" + format + "' for bijection");
    }
    deliver(payload.str(), out_path, out);
    return roundtrip ? 0 : 2;
}

int cmd_bijection_psi(const std::optional<std::string>& dims_text,
                      const std::optional<std::string>& orientation_text,
                      const std::optional<std::string>& w_text, const std::string& cut_path,
                      const std::string& format, const std::string& out_path, std::ostream& out,
                      std::istream& in) {
    json body;
    if (cut_path == "-") {
        in >> body;
    } else {
        std::ifstream file(cut_path);
        if (!file) throw std::invalid_argument("cannot open cut file '" + cut_path + "'");
        file >> body;
    }
    const CutData cut = cut_data_from_json(body);
    const DimVector dims = dim_vector(cut.eta);
    if (dims_text && parse_dims(*dims_text) != dims)
        throw std::invalid_argument("--dims does not match the lace class in the cut file");
    const Weights weights = resolve_weights(cut.eta.n, orientation_text, w_text);

    const MultiPartition lambda = psi(cut, weights.w);
    const bool roundtrip = phi(lambda, weights.w) == cut &&
                           lambda.weight() == cut.weight();

    std::ostringstream payload;
    if (format == "json") {
        json result;
        result["lambda"] = json::array();
        for (const Partition& p : lambda.lambdas) result["lambda"].push_back(p.parts);
        result["dims"] = dims;
        result["w"] = to_string(weights.w);
        result["weight"] = lambda.weight();
        result["roundtrip"] = roundtrip;
        payload << result.dump(2) << "\n";
    } else if (format == "text") {
        payload << "dims: " << dims_to_string(dims) << "\n";
        payload << "w: " << to_string(weights.w) << "\n";
        payload << "lambda: " << to_string(lambda) << "\n";
        payload << "weight: " << lambda.weight() << "\n";
        payload << "roundtrip: " << (roundtrip ? "ok" : "FAILED") << "\n";
    } else {
        throw std::invalid_argument("unknown format '" + format + "' for bijection");
    }
    deliver(payload.str(), out_path, out);
    return roundtrip ? 0 : 2;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact verifier for lacing-diagram partition identities"};
    app.name("laceq");
    app.require_subcommand(1);

    std::string wq_orientation;
    CLI::App* wq_cmd = app.add_subcommand("wq", "Permutation tuple w_Q of an orientation word");
    wq_cmd->add_option("orientation", wq_orientation,
                       "orientation word over {R,L}, e.g. RRLLR")
        ->required();
    std::string wq_out_path;
    wq_cmd->add_option("--out", wq_out_path, "write the payload to a file");

    std::string dims_text;
    std::string orientation_text;
    std::string w_text;
    std::string format = "text";
    std::string out_path;
    int trunc_q = 30;
    int trunc_z = 12;
    std::string verify_name;
    std::string parts_text;
    std::string cut_path;

    auto add_common = [&](CLI::App* cmd, bool dims_required) {
        CLI::Option* dims_opt =
            cmd->add_option("--dims", dims_text, "dimension vector, e.g. 1,2,1");
        if (dims_required) dims_opt->required();
        CLI::Option* orientation_opt = cmd->add_option(
            "--orientation", orientation_text, "orientation word; implies w = w_Q");
        cmd->add_option("--w", w_text, "permutation tuple, e.g. 1/12/123")
            ->excludes(orientation_opt);
        cmd->add_option("--format", format, "text | json | csv")
            ->check(CLI::IsMember({"text", "json", "csv"}));
        cmd->add_option("--out", out_path, "write the payload to a file");
    };

    CLI::App* laces_cmd =
        app.add_subcommand("laces", "Tabulate the lace classes of a dimension vector");
    add_common(laces_cmd, true);

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "Verify an identity by exact series comparison");
    verify_cmd->add_option("name", verify_name, "main | cancel | reineke | enriched")
        ->required();
    add_common(verify_cmd, true);
    verify_cmd->add_option("--N", trunc_q, "q-degree truncation (default 30)");
    verify_cmd->add_option("--Nz", trunc_z, "z-degree truncation (default 12)");

    CLI::App* bij_cmd = app.add_subcommand("bijection", "Cut or glue multipartitions");
    bij_cmd->require_subcommand(1);
    CLI::App* phi_cmd = bij_cmd->add_subcommand("phi", "multipartition -> cut data");
    add_common(phi_cmd, true);
    phi_cmd->add_option("--parts", parts_text, "multipartition, e.g. \"2,1 / 5,1 / 3,3,2,1,1\"");
    CLI::App* psi_cmd = bij_cmd->add_subcommand("psi", "cut data -> multipartition");
    add_common(psi_cmd, false);
    psi_cmd->add_option("--cut", cut_path, "cut-data JSON file, or - for stdin")->required();

    std::vector<const char*> argv;
    argv.push_back("laceq");
    for (const std::string& arg : args) argv.push_back(arg.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    const auto opt = [](const CLI::App* cmd, const std::string& name,
                        const std::string& value) -> std::optional<std::string> {
        return cmd->count(name) > 0 ? std::optional<std::string>(value) : std::nullopt;
    };

    try {
        if (wq_cmd->parsed()) return cmd_wq(wq_orientation, wq_out_path, out);
        if (laces_cmd->parsed())
            return cmd_laces(dims_text, opt(laces_cmd, "--orientation", orientation_text),
                             opt(laces_cmd, "--w", w_text), format, out_path, out);
        if (verify_cmd->parsed())
            return cmd_verify(verify_name, dims_text,
                              opt(verify_cmd, "--orientation", orientation_text),
                              opt(verify_cmd, "--w", w_text), trunc_q, trunc_z, format, out_path,
                              out);
        if (bij_cmd->parsed()) {
            if (phi_cmd->parsed())
                return cmd_bijection_phi(dims_text,
                                         opt(phi_cmd, "--orientation", orientation_text),
                                         opt(phi_cmd, "--w", w_text), parts_text, format,
                                         out_path, out);
            if (psi_cmd->parsed())
                return cmd_bijection_psi(opt(psi_cmd, "--dims", dims_text),
                                         opt(psi_cmd, "--orientation", orientation_text),
                                         opt(psi_cmd, "--w", w_text), cut_path, format, out_path,
                                         out, std::cin);
        }
        err << "error: no command\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace laceq

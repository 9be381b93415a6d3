#include "bandlab/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace bandlab {

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string params_to_json(const ModelParams& p, ModelKind kind) {
    nlohmann::ordered_json j;
    j["tau"] = p.tau;
    j["mu"] = p.mu;
    j["c"] = p.c;
    j["beta"] = p.beta;
    j["gamma0"] = p.gamma0;
    j["k"] = p.k;
    j["v_inf"] = p.v_inf;
    j["kind"] = to_string(kind);
    return j.dump(2) + "\n";
}

std::pair<ModelParams, ModelKind> params_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(std::string("invalid params JSON: ") + e.what());
    }
    const ModelKind kind = kind_from_string(j.at("kind").get<std::string>());
    const ModelParams p = derive_params(
        j.at("tau").get<double>(), j.at("mu").get<double>(),
        j.at("c").get<double>(), j.at("beta").get<double>(),
        j.at("gamma0").get<double>(), j.value("k", 1.0),
        j.value("v_inf", 1.0), kind);
    return {p, kind};
}

std::pair<ModelParams, ModelKind> load_params_file(
    const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open params file " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return params_from_json(ss.str());
}

void atomic_write(const std::filesystem::path& path, const std::string& content) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot write " + tmp.string());
        out << content;
        if (!out) throw Error("short write to " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

double normalization_for(ModelKind kind, const ModelParams& p) {
    switch (kind) {
        case ModelKind::UnlimitedNoCrowd:
        case ModelKind::UnlimitedCrowd:
            return p.Q;
        case ModelKind::LimitedCrowd:
            return p.Q1;
        case ModelKind::LimitedNoCrowd:
            return p.Q2;
    }
    throw Error("invalid ModelKind");
}

std::string profile_to_csv(const Profile& profile, bool normalized_columns,
                           bool scaled_zeta) {
    std::ostringstream os;
    os << "zeta,u,v";
    if (normalized_columns) os << ",u_normalized,v_over_vinf";
    if (scaled_zeta) os << ",zeta_scaled";
    os << "\n";
    const double norm = normalization_for(profile.kind, profile.params);
    const double scale = profile.params.c / profile.params.mu;
    for (std::size_t i = 0; i < profile.zeta.size(); ++i) {
        os << format_double(profile.zeta[i]) << ',' << format_double(profile.u[i])
           << ',' << format_double(profile.v[i]);
        if (normalized_columns)
            os << ',' << format_double(profile.u[i] / norm) << ','
               << format_double(profile.v[i] / profile.params.v_inf);
        if (scaled_zeta) os << ',' << format_double(profile.zeta[i] * scale);
        os << "\n";
    }
    return os.str();
}

std::string profile_to_json(const Profile& profile) {
    nlohmann::ordered_json j;
    j["kind"] = to_string(profile.kind);
    j["params"] =
        nlohmann::json::parse(params_to_json(profile.params, profile.kind));
    j["zeta"] = profile.zeta;
    j["u"] = profile.u;
    j["v"] = profile.v;
    return j.dump(2) + "\n";
}

std::string trajectory_to_csv(const std::vector<FieldState>& snapshots) {
    std::ostringstream os;
    os << "x,u,v\n";
    for (const FieldState& s : snapshots) {
        os << "# t=" << format_double(s.t) << "\n";
        for (std::size_t i = 0; i < s.u.size(); ++i)
            os << format_double(s.grid.x(i)) << ',' << format_double(s.u[i])
               << ',' << format_double(s.v[i]) << "\n";
    }
    return os.str();
}

std::string trajectory_to_json(const std::vector<FieldState>& snapshots,
                               const std::string& engine) {
    nlohmann::ordered_json j;
    j["engine"] = engine;
    if (!snapshots.empty()) {
        j["grid"] = {{"x_min", snapshots.front().grid.x_min},
                     {"x_max", snapshots.front().grid.x_max},
                     {"n", snapshots.front().grid.n}};
    }
    j["snapshots"] = nlohmann::ordered_json::array();
    for (const FieldState& s : snapshots) {
        nlohmann::ordered_json js;
        js["t"] = s.t;
        js["u"] = s.u;
        js["v"] = s.v;
        j["snapshots"].push_back(std::move(js));
    }
    return j.dump(2) + "\n";
}

}  // namespace bandlab

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "bandlab/analytic.hpp"
#include "bandlab/model.hpp"
#include "bandlab/pde.hpp"

namespace bandlab {

/// Parameter records round-trip through JSON with exactly the raw field
/// names; derived fields are always recomputed via derive_params.
std::string params_to_json(const ModelParams& p, ModelKind kind);
std::pair<ModelParams, ModelKind> params_from_json(const std::string& text);
std::pair<ModelParams, ModelKind> load_params_file(
    const std::filesystem::path& path);

/// Writes content to a temporary sibling then renames; a crash never
/// leaves a partially written file behind.
void atomic_write(const std::filesystem::path& path, const std::string& content);

/// `zeta,u,v[,u_normalized,v_over_vinf][,zeta_scaled]` at 17 significant
/// digits. normalization divides u by Q, Q1 or Q2 depending on the kind.
std::string profile_to_csv(const Profile& profile, bool normalized_columns,
                           bool scaled_zeta);
std::string profile_to_json(const Profile& profile);

/// Snapshot trajectory: one `# t=<hours>` comment line per snapshot
/// followed by `x,u,v` rows.
std::string trajectory_to_csv(const std::vector<FieldState>& snapshots);
std::string trajectory_to_json(const std::vector<FieldState>& snapshots,
                               const std::string& engine);

/// Figure normalization constant for a kind (Q, Q1 or Q2).
double normalization_for(ModelKind kind, const ModelParams& p);

std::string format_double(double x);  ///< fixed "%.17g"

}  // namespace bandlab

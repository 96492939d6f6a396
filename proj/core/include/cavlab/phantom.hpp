#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "cavlab/image.hpp"

namespace cavlab::synth {

// Concept roles mirror a large fixed-location finding (CARDIO), a small
// random-location one (NODULE) and a medium semi-fixed one (EFFUSION).
enum class ConceptId : int { Cardio = 0, Nodule = 1, Effusion = 2 };

inline constexpr std::array<ConceptId, 3> kAllConcepts = {
    ConceptId::Cardio, ConceptId::Nodule, ConceptId::Effusion};

std::string_view concept_name(ConceptId c);
std::optional<ConceptId> concept_from_name(std::string_view name);

enum class StyleId : int { A = 0, B = 1 };

std::string_view style_name(StyleId s);
std::optional<StyleId> style_from_name(std::string_view name);

// Rendering parameters that differ between the two dataset styles. Geometry
// is style-independent by construction, only intensities change.
struct StyleParams {
  float noise_sigma;
  float offset;
  float contrast;
};

StyleParams style_params(StyleId s);

// Fixed phantom layout (64x64): torso ellipse, two lung fields, heart.
// Pixel (x,y) has its center at integer coordinates; shapes are tested with
// center-of-pixel point-in-shape predicates and no anti-aliasing, so mask
// areas are exact integer counts.
struct PhantomLayout {
  int width = 64, height = 64;
  float background = 0.08f;
  double torso_cx = 32, torso_cy = 34, torso_a = 24, torso_b = 26;
  float torso_intensity = 0.45f;
  double lung_cx[2] = {20, 44};  // [left, right]
  double lung_cy = 30, lung_a = 9, lung_b = 14;
  float lung_intensity = 0.18f;
  double heart_cx = 34, heart_cy = 38, heart_a = 8, heart_b = 11;
  float heart_intensity = 0.62f;
  float nodule_intensity = 0.85f;
  float effusion_delta = 0.25f;
};

const PhantomLayout& phantom_layout();

// Concept geometry drawn from the sample seed. Separated out so tests can
// re-rasterize masks from the same parameters with an independent oracle.
struct SampleGeometry {
  double heart_scale = 1.0;  // CARDIO: horizontal semi-axis factor in [1.4, 1.8]
  int nodule_side = -1;      // 0 = left lung, 1 = right lung
  double nodule_r = 0.0;     // radius in [2, 4]
  double nodule_cx = 0.0, nodule_cy = 0.0;
  int effusion_side = -1;
  int effusion_height = 0;  // band height in [6, 12]
};

SampleGeometry draw_geometry(const std::vector<ConceptId>& present, std::uint64_t seed);

struct Sample {
  std::uint64_t id = 0;
  StyleId style = StyleId::A;
  std::uint64_t seed = 0;
  Image image;
  std::vector<ConceptId> labels;         // sorted
  std::map<ConceptId, Mask> masks;       // present concepts only, all nonempty
};

// Deterministic phantom with injected concepts and exact ground-truth masks.
// Same (style, concepts, seed) always yields byte-identical pixels and masks;
// mask geometry is identical across styles.
Sample generate_sample(StyleId style, const std::vector<ConceptId>& concepts,
                       std::uint64_t seed);

}  // namespace cavlab::synth

#pragma once

#include "scatter/rgb.hpp"
#include "scatter/vec3.hpp"

namespace scatter {

// GGX roughness, anisotropic. Beckmann is left as an extension point; the
// distribution tag exists so call sites read explicitly.
struct RoughnessParams {
    double alpha_x = 0.5;
    double alpha_y = 0.5;

    static RoughnessParams iso(double a) { return {a, a}; }
    bool valid() const { return alpha_x > 0.0 && alpha_y > 0.0; }
};

struct FresnelSpec {
    enum class Mode { ConstantF0, Dielectric, Conductor };

    Mode mode = Mode::ConstantF0;
    Rgb f0{1.0};      // ConstantF0: per-channel reflectance in [0,1]
    double eta = 1.5; // Dielectric: relative IOR
    Rgb eta_c{0.2};   // Conductor: per-channel eta
    Rgb k_c{3.0};     // Conductor: per-channel extinction

    static FresnelSpec none() { return {Mode::ConstantF0, Rgb{1.0}}; }
    static FresnelSpec constant(const Rgb& f0) { return {Mode::ConstantF0, f0}; }
    static FresnelSpec dielectric(double eta) {
        FresnelSpec f;
        f.mode = Mode::Dielectric;
        f.eta = eta;
        return f;
    }
    static FresnelSpec conductor(const Rgb& eta, const Rgb& k) {
        FresnelSpec f;
        f.mode = Mode::Conductor;
        f.eta_c = eta;
        f.k_c = k;
        return f;
    }
};

// Smith Lambda, signed convention: Lambda(w) >= 0 for w.z > 0 and
// Lambda(w) = -1 - Lambda(-w) <= -1 for w.z < 0, so downward directions
// carry negative values (the "Downwards" branch test of the segment term).
// |z| is clamped to 1e-7 before forming tan(theta).
double lambda(const Direction& w, const RoughnessParams& r);

// Masking of an upward direction, 1/(1 + Lambda). Throws for w.z <= 0.
double g1(const Direction& w, const RoughnessParams& r);

// Anisotropic GGX normal distribution, zero below the horizon.
double ndf(const Direction& h, const RoughnessParams& r);

// Projected area of the microsurface seen along -view: |v.z| (1 + Lambda(v))
// in the signed convention. Positive for both hemispheres, zero at v = -z.
double projected_area(const Direction& view, const RoughnessParams& r);

// Visible-normal density of micronormal h from `view` (pointing away from
// travel): <view,h>+ D(h) / projected_area(view). Valid for any view.
double vndf_pdf(const Direction& view, const Direction& h, const RoughnessParams& r);

// Draws a micronormal from the VNDF of `view` via the spherical-cap
// construction, exact for views below the horizon as well.
Direction sample_vndf_view(const Direction& view, const RoughnessParams& r, double u1, double u2);

// Spec-facing wrapper taking the downward incident propagation direction.
Direction sample_vndf(const Direction& incident, const RoughnessParams& r, double u1, double u2);

// Unpolarized Fresnel per channel; cos_i is |w_i . w_h|.
Rgb fresnel(const FresnelSpec& f, double cos_i);

// Smith microsurface phase function F(wi,wh) D_wi(wh) / (4 |wh.wi|) with
// wi pointing away from travel. F==1 integrates to one over the sphere.
Rgb smith_phase(const Direction& wi, const Direction& wo, const RoughnessParams& r,
                const FresnelSpec& f);

// Vertex term of a path contribution: f_p(-d_in, d_out) |Lambda(d_in)|,
// chosen so the product of vertex terms times S_k matches the phase-function
// product times p_exit.
Rgb vertex_term(const Direction& d_in, const Direction& d_out, const RoughnessParams& r,
                const FresnelSpec& f);

} // namespace scatter

#pragma once

// Frozen high-precision reference values, computed with an independent
// 60-significant-digit arbitrary-precision implementation of the closed
// forms. All inputs are exact IEEE doubles; outputs are correct to well
// beyond the tolerances they are compared at.

namespace sqz_test {

struct OatRefSample {
  double t;
  double zeta;  // direct sqrt(C - sqrt(A^2 + B^2)) evaluation
};

// delta = 1e-8, ordered phase (t in 1/(2 kappa J))
inline constexpr OatRefSample kOatRefOrdered[] = {
    {2221.441474632787, 0.000457649034411765704342499558049161771811},
    {5553.603686581967, 0.0001999999955000002727214451921941235325717},
    {11107.207373163934, 0.000141421355883756115324401824055425978875},
    {17105.09935467246, 0.0002138497124583291396930519693325264397988},
};

// delta = 1e-8, disordered phase
inline constexpr OatRefSample kOatRefDisordered[] = {
    {3141.59263788183, 0.0003236067654794757438703106691731529215627},
    {7853.9815947045745, 0.0001414213541159892409075446658357338807477},
    {15707.963189409149, 0.00009999999950000000479612799456450431519488},
    {24190.26331169009, 0.0001512145834015454604433710754895312364691},
};

struct DickeRefSample {
  double t;
  double zeta_s;
};

// Dicke spin squeezing at delta = 1e-4, psi = +2.9444389791664403
// (Delta = -0.9). Couplings in units of g:
//   normal:       omega = 4.359116883039499, epsilon = 0.2294272043705
//   superradiant: omega = 4.3586809931446,   epsilon = 0.22940426279708426
inline constexpr DickeRefSample kDickeRefNormal[] = {
    {150.8412014244618, 0.2299187840462789226689165495234050247966},
    {370.246585314588, 0.237832045049874394593874245977995026086},
    {685.6418246566444, 0.233858909514461652514970271118146847164},
};

inline constexpr DickeRefSample kDickeRefSuper[] = {
    {106.65818449299933, 0.2350809903842335103210685149532539160162},
    {261.797361937362, 0.2280048030883097919083719147664614190116},
    {484.8099295136333, 0.2320998187557556825046454510345144166629},
};

struct DickeAbcPin {
  double omega, eps_tilde, gamma, t;
  double a_s, b_s, c_s, a_p, b_p, c_p;
};

// Moderate-parameter transcription pins (30 digits, coefficient frame).
inline constexpr DickeAbcPin kDickeAbcPins[] = {
    // xi = 1.5, psi = 1.0 (normal)
    {2.0192629206442056, 0.7428453148248049, 0.5, 2.7,
     1.3013717810706430021599954893, -0.421334477164123774043048864243,
     1.78961387267614806980160746333, 0.190519367733498704578111532596,
     -0.346103991621168320989141771039, 1.21971806642291523265912719256},
    // xi = 0.7, psi = -1.0 (superradiant)
    {0.5074599578489022, 1.9705988315589487, 0.35, 2.7,
     -0.0508607271230732522084280434588, -0.114947673572844744114473039679,
     1.02680655295130732336165922349, 0.588620739115065266217100810299,
     -0.372835317250344500434427111817, 1.2345089972397850683207208846},
    // xi = 2.0, psi = 0 (normal, resonant: spin and photon coincide)
    {1.4142135623730951, 1.4142135623730951, 0.5, 4.1,
     -0.25918232690638519886150718667, 0.0737931016896427660485410385764,
     1.06770754858297052183989248801, -0.25918232690638519886150718667,
     0.0737931016896427660485410385764, 1.06770754858297052183989248801},
};

}  // namespace sqz_test

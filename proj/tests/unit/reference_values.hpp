#pragma once

// Frozen output of tests/oracles/generate_reference.py (mpmath, 60-500 digits).
// Complex values are stored as (log|z|, arg z).

namespace ref {

struct LogPair {
  double log_mag;
  double phase;
};

inline constexpr double kLogGamma171_5 = 709.14316303092824227;
inline constexpr double kLogGammaHalf = 0.57236494292470008707;
inline constexpr double kLogGammaMillion = 12815508.023025157401;  // at 1e6 + 0.25

struct PoissonCase {
  long n;
  double lambda;
  double value;
};
inline constexpr PoissonCase kPoisson[] = {
    {1000, 1000.0, -4.3728995060262968242},
    {0, 5.0, -5.0},
    {1000000, 999500.0, -7.9517355778180623991},
    {3, 0.25, -6.2006425525877268573},
};

struct RatioCase {
  double x, a, b, value;
};
inline constexpr RatioCase kGammaRatio[] = {
    {1e6, 0.5, 0.0, 6.9077551539821370521},
    {10.0, 2.5, 1.0, 3.6299349388609304064},
    {1.0, 7.0, 0.5, 8.6459435987006595225},
};

inline constexpr LogPair kKummer1_5_2 = {7.039125033755058054, -0.70347147763913126375};  // z = 10 e^{i pi/5}
inline constexpr LogPair kKummer3_5_4 = {93.809959886141736253, -2.0102475615667589445};  // z = 100 e^{0.3 i}
inline constexpr LogPair kKummerHalf1Neg50 = {-2.5232719950007562407, 0.0};               // z = -50
inline constexpr LogPair kKummer11_21 = {-45.373685199870305367, -1.7998534349082775389};  // z = 900 e^{-2.4 i}

inline constexpr LogPair kBessel1_5 = {2.5880366385074291049, 2.0506489803966760875};  // z = 5 e^{i pi/7}
inline constexpr LogPair kBessel0 = {1.2924440917214858195, -2.7695125600399140128};   // z = 3 + 4i
inline constexpr LogPair kBessel4_5 = {-1.7141795630181713601, 0.78539816339744830962};  // z = 20i

struct CoeffCase {
  long q;
  double alpha;
  double x;  // mu k^2
  LogPair value;
};
inline constexpr CoeffCase kB[] = {
    {1, 4.0, 0.0, {-0.016154599928495942767, 0.0}},
    {3, 5.0, 0.03, {-0.49412154821848622212, 1.7907113111504149019}},
    {7, 5.0, 0.2, {-27.411076058734596792, 1.3965681851617222619}},
    {20, 30.0, 0.03, {-573.91824144290587501, 3.0080501963268220199}},
    {12, 30.0, 0.2, {-821.25439312506238227, -1.9074999748533971358}},
    {5, 1.0, 0.2, {-4.8408466740522450838, 0.76586401442384613166}},
};
inline constexpr CoeffCase kA[] = {
    {2, 5.0, 0.1, {-1.9921816458535477983, 2.8228175336751785852}},
    {1, 3.0, 0.0, {-0.014829801947175436255, 0.0}},
    {6, 8.0, 0.05, {-11.236751577544926978, 1.521781666916875789}},
};
// |alpha| = 500, mu k^2 with k = 7, tau = 0.01.
inline constexpr CoeffCase kBLarge[] = {
    {5, 500.0, 0.0, {-0.00085867226824341727977, -1.567008641384996822}},
    {50, 500.0, 0.0, {-0.085867221403687847964, -3.1036953533853240895}},
};

}  // namespace ref

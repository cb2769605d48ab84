// Embedded catalog data: the 72 multiplicity-one fusion rings of rank <= 6
// plus two rank-7 examples, transcribed from the published tables, each with
// a content checksum validated at load time.
#include "fusion/catalog_data.hpp"

namespace fusion {

const std::vector<RawCatalogEntry>& raw_catalog_entries() {
    static const std::vector<RawCatalogEntry> data = {
        {"r1-1", 1, "0", "1", true, {}, {}, "Vec(C_1)", false, 1.0, "1", {1.0}, {{CodegreeKind::Rational, 1, 1, 1, 0, 1, {}, {}}}, 3509376124925261967ull, true, "trivial"},
        {"r2-1", 2, "01", "10010110", true, {"simple"}, {}, "Vec(C_2)", false, 2.0, "2", {1.0,1.0}, {{CodegreeKind::Rational, 2, 1, 1, 0, 2, {}, {}}}, 6134783453288281252ull, true, "simple, near-group C_1+0."},
        {"r2-2", 2, "01", "10010111", true, {"simple"}, {}, "PSU(2)_3", false, 3.618033988749895, "alpha_5 + 2 ~ 3.618", {1.0,1.618033988749895}, {{CodegreeKind::Quadratic, 5, 1, 2, 5, 1, {}, {}}, {CodegreeKind::Quadratic, 5, -1, 2, 5, 1, {}, {}}}, 6134784552799909463ull, true, "simple, near-group C_1+1."},
        {"r3-1", 3, "021", "100010001010001100001100010", true, {"simple"}, {}, "Vec(C_3)", false, 2.999999999999999, "3", {0.9999999999999998,0.9999999999999998,1.0}, {{CodegreeKind::Rational, 3, 1, 1, 0, 3, {}, {}}}, 6640934446129925934ull, true, "simple."},
        {"r3-2", 3, "012", "100010001010100001001001110", true, {}, {}, "SU(2)_2", false, 3.9999999999999996, "4", {1.0,1.0,1.414213562373095}, {{CodegreeKind::Rational, 4, 1, 1, 0, 2, {}, {}}, {CodegreeKind::Rational, 2, 1, 1, 0, 1, {}, {}}}, 11123501561608657723ull, true, "near-group C_2+0."},
        {"r3-3", 3, "012", "100010001010100001001001111", true, {}, {}, "Rep(S_3), PSU(2)_4", false, 5.999999999999999, "6", {1.0,1.0,1.9999999999999998}, {{CodegreeKind::Rational, 6, 1, 1, 0, 1, {}, {}}, {CodegreeKind::Rational, 3, 1, 1, 0, 1, {}, {}}, {CodegreeKind::Rational, 2, 1, 1, 0, 1, {}, {}}}, 11123500462097029512ull, true, "near-group C_2+1."},
        {"r3-4", 3, "012", "100010001010101011001011111", true, {"simple"}, {}, "PSU(2)_5", false, 9.295896943239772, "alpha_7^4-alpha_7^2+1 ~ 9.296", {1.0,1.8019377358048385,2.2469796037174667}, {{CodegreeKind::PolyRoots, 0, 0, 1, 0, 1, {-49,49,-14,1}, {{9.295897, 1},{2.862937, 1},{1.841166, 1}}}}, 13917828778197066699ull, true, "simple."},
        {"r4-1", 4, "0213", "1000010000100001010000011000001000101000000101000001001001001000", true, {"pointed"}, {}, "Vec(C_4)", false, 3.9999999999999996, "4", {0.9999999999999999,0.9999999999999999,1.0,1.0}, {{CodegreeKind::Rational, 4, 1, 1, 0, 4, {}, {}}}, 3501899796126582901ull, true, "pointed."},
        {"r4-2", 4, "0123", "1000010000100001010010000001001000100001100001000001001001001000", true, {"pointed"}, {}, "Vec(C_2^2)", false, 4.0, "4", {1.0,1.0,1.0,1.0}, {{CodegreeKind::Rational, 4, 1, 1, 0, 4, {}, {}}}, 4429003402201780287ull, true, "pointed."},
        {"r4-3", 4, "0213", "1000010000100001010000101000000100101000010000010001000100011110", true, {}, {}, "TY(C_3)", false, 6.0, "6", {1.0,1.0,1.0,1.7320508075688772}, {{CodegreeKind::Rational, 6, 1, 1, 0, 2, {}, {}}, {CodegreeKind::Rational, 3, 1, 1, 0, 2, {}, {}}}, 14450670534275944645ull, true, "near-group C_3+0."},
        {"r4-4", 4, "0123", "1000010000100001010010000001001000100001101001010001001001011010", true, {}, {}, "SU(2)_3, Bisch-Haagerup BH_1 , Vec(C_2) (x) PSU(2)_3", false, 7.236067977499788, "2alpha_5+4 ~ 7.236", {1.0,1.0,1.6180339887498942,1.618033988749895}, {{CodegreeKind::Quadratic, 5, 1, 1, 5, 2, {}, {}}, {CodegreeKind::Quadratic, 5, -1, 1, 5, 2, {}, {}}}, 15194575803187374431ull, true, "extension of Vec(C_2)."},
        {"r4-5", 4, "0213", "1000010000100001010000101000000100101000010000010001000100011111", false, {"non-Drinfeld"}, {}, "", false, 8.30277563773199, "(13+sqrt13)/2 ~ 8.302", {1.0,1.0,1.0,2.3027756377319935}, {{CodegreeKind::Quadratic, 13, 1, 2, 13, 1, {}, {}}, {CodegreeKind::Quadratic, 13, -1, 2, 13, 1, {}, {}}, {CodegreeKind::Rational, 3, 1, 1, 0, 2, {}, {}}}, 14450669434764316434ull, true, "near-group C_3+1, non-Drinfeld."},
        {"r4-6", 4, "0123", "1000010000100001010010000010000100100010110100110001000100111110", true, {"integral"}, {}, "Rep(D_5)", false, 9.999999999999986, "10", {1.0,1.0,1.9999999999999978,1.9999999999999987}, {{CodegreeKind::Rational, 10, 1, 1, 0, 1, {}, {}}, {CodegreeKind::Rational, 5, 1, 1, 0, 2, {}, {}}, {CodegreeKind::Rational, 2, 1, 1, 0, 1, {}, {}}}, 12524631242603652005ull, true, "integral."},
        {"r4-7", 4, "0123", "1000010000100001010011000001001100100001101001010001001101011111", true, {"simple","perfect"}, {}, "PSU(2)_3^(x) 2", false, 13.090169943749467, "5alpha_5^2 ~ 13.090", {1.0,1.618033988749895,1.618033988749895,2.6180339887498936}, {{CodegreeKind::Quadratic, 15, 5, 2, 5, 1, {}, {}}, {CodegreeKind::Rational, 5, 1, 1, 0, 2, {}, {}}, {CodegreeKind::Quadratic, 15, -5, 2, 5, 1, {}, {}}}, 2320332371699872188ull, true, "perfect (the first non-simple one)."},
        {"r4-8", 4, "0123", "1000010000100001010010000001001000100001101101110001001001111011", true, {}, {}, "PSU(2)_6, even part the 1-supertransitive subfactor of index 3+2alpha_4 without non-self-adjoint objects", false, 13.65685424949238, "8+4alpha_4 ~ 13.657", {1.0,1.0,2.414213562373095,2.414213562373095}, {{CodegreeKind::Quadratic, 8, 4, 1, 2, 1, {}, {}}, {CodegreeKind::Rational, 4, 1, 1, 0, 2, {}, {}}, {CodegreeKind::Quadratic, 8, -4, 1, 2, 1, {}, {}}}, 10091359604059847487ull, true, "extension of C_2, quadratic (C_2,1,1)."},
        {"r4-9", 4, "0132", "1000010000100001010010000001001000100001011110110001001010110111", true, {}, {}, "even part of the 1-supertransitive subfactor of index 3+2alpha_4 with non-self-adjoint objects", false, 13.656854249492392, "8+4alpha_4 ~ 13.657", {1.0,1.0,2.4142135623730954,2.414213562373097}, {{CodegreeKind::Quadratic, 8, 4, 1, 2, 1, {}, {}}, {CodegreeKind::Rational, 4, 1, 1, 0, 2, {}, {}}, {CodegreeKind::Quadratic, 8, -4, 1, 2, 1, {}, {}}}, 72495402465725677ull, true, "extension of C_2."},
        {"r4-10", 4, "0123", "1000010000100001010010100101001100100101101101110001001101111111", true, {"simple"}, {}, "PSU(2)_7", false, 19.234422383429326, "alpha_9^4+2alpha_9+3 ~ 19.234", {1.0,1.8793852415718166,2.532088886237956,2.8793852415718186}, {{CodegreeKind::PolyRoots, 0, 0, 1, 0, 1, {-243,162,-27,1}, {{19.234422, 1},{5.445622, 1},{2.319955, 1}}}, {CodegreeKind::Rational, 3, 1, 1, 0, 1, {}, {}}}, 17833431753290641413ull, true, "simple."},
        {"r5-1", 5, "02143", "10000010000010000010000010100000001100000010000010001001000000010000010100000010001000000101000100000000100010010001000000100", true, {"simple"}, {}, "Vec(C_5)", false, 4.999999999999998, "5", {0.9999999999999998,0.9999999999999998,0.9999999999999998,0.9999999999999998,1.0}, {{CodegreeKind::Rational, 5, 1, 1, 0, 5, {}, {}}}, 17277880567580712975ull, true, "simple."},
        {"r5-2", 5, "02134", "10000010000010000010000010100000010100000010000001001001000000010010000000100010001000100010000000010000100001000010000111110", true, {}, {}, "TY(C_4)", false, 7.999999999999998, "8", {1.0,1.0,1.0,1.0,1.9999999999999996}, {{CodegreeKind::Rational, 8, 1, 1, 0, 2, {}, {}}, {CodegreeKind::Rational, 4, 1, 1, 0, 3, {}, {}}}, 13214268170639653846ull, true, "near-group C_4+0."},
        {"r5-3", 5, "01234", "10000010000010000010000010100010000000100010000001001000001010000010000000100010001000100010000000010000100001000010000111110", true, {}, {}, "Rep(D_4), Rep(Q_8)", false, 7.999999999999998, "8", {1.0,1.0,1.0,1.0,1.9999999999999996}, {{CodegreeKind::Rational, 8, 1, 1, 0, 2, {}, {}}, {CodegreeKind::Rational, 4, 1, 1, 0, 3, {}, {}}}, 10586173342741716088ull, true, "near-group C_2^2 + 0."},
        {"r5-4", 5, "02134", "10000010000010000010000010100000010100000010000001001001000000010010000000100010001000100010000000010000100001000010000111111", false, {"non-Drinfeld"}, {}, "", false, 10.561552812808833, "(sqrt17+17)/2 ~ 10.562", {1.0,1.0,1.0,1.0,2.5615528128088307}, {{CodegreeKind::Quadratic, 17, 1, 2, 17, 1, {}, {}}, {CodegreeKind::Quadratic, 17, -1, 2, 17, 1, {}, {}}, {CodegreeKind::Rational, 4, 1, 1, 0, 3, {}, {}}}, 13214269270151282057ull, true, "near-group C_4+1, non-Drinfeld."},
        {"r5-5", 5, "01234", "10000010000010000010000010100010000000100010000001001000001010000010000000100010001000100010000000010000100001000010000111111", false, {"non-Drinfeld"}, {}, "", false, 10.561552812808833, "(sqrt17+17)/2 ~ 10.562", {1.0,1.0,1.0,1.0,2.5615528128088307}, {{CodegreeKind::Quadratic, 17, 1, 2, 17, 1, {}, {}}, {CodegreeKind::Quadratic, 17, -1, 2, 17, 1, {}, {}}, {CodegreeKind::Rational, 4, 1, 1, 0, 3, {}, {}}}, 10586174442253344299ull, true, "near-group C_2^2 + 1, non-Drinfeld."},
        {"r5-6", 5, "01234", "10000010000010000010000010100010000000100010000001001000001010001010010011000010001000100110001001100000100001001100011011001", true, {}, {}, "SU(2)_4, SO(3)_2", false, 12.000000000000021, "12", {1.0,1.0,1.7320508075688805,1.7320508075688805,2.0}, {{CodegreeKind::Rational, 12, 1, 1, 0, 2, {}, {}}, {CodegreeKind::Rational, 4, 1, 1, 0, 2, {}, {}}, {CodegreeKind::Rational, 3, 1, 1, 0, 1, {}, {}}}, 44472021119999489ull, true, "Extension of Vec(C_2)."},
        {"r5-7", 5, "01324", "10000010000010000010000010100010000000100010000001001000001001001100010011000010001001000101001001100000100001001100011011001", true, {"non-modular","weakly group-theoretical"}, {}, "zesting of SO(3)_2, see", true, 11.999999999999996, "12", {1.0,1.0,1.7320508075688765,1.732050807568877,2.0}, {{CodegreeKind::Rational, 12, 1, 1, 0, 2, {}, {}}, {CodegreeKind::Rational, 4, 1, 1, 0, 2, {}, {}}, {CodegreeKind::Rational, 3, 1, 1, 0, 1, {}, {}}}, 1843755384748048243ull, true, "unitarily categorified (see ), non-modular, weakly group-theoretical"},
        {"r5-8", 5, "01234", "10000010000010000010000010100010000001000001000001001000010011010001010001100010000100010111001001100000100001000110011011100", true, {"integral"}, {}, "Rep(D_7)", false, 14.00000000000001, "14", {1.0,1.0,2.0000000000000004,2.000000000000001,2.0000000000000013}, {{CodegreeKind::Rational, 14, 1, 1, 0, 1, {}, {}}, {CodegreeKind::Rational, 7, 1, 1, 0, 3, {}, {}}, {CodegreeKind::Rational, 2, 1, 1, 0, 1, {}, {}}}, 3681167838583920559ull, true, "integral."},
        {"r5-9", 5, "01234", "10000010000010000010000010100010000001000000100010001000010011100000110001100010000010001110110011010000100010000110110110110", false, {"non-Schur","non-Drinfeld","non-Czero"}, {3,3,2,2,4,3,3,3,3}, "", false, 16.605551275463988, "sqrt13+13 ~ 16.606", {1.0,1.0,2.0,2.302775637731994,2.302775637731995}, {{CodegreeKind::Quadratic, 13, 1, 1, 13, 1, {}, {}}, {CodegreeKind::Quadratic, 13, -1, 1, 13, 1, {}, {}}, {CodegreeKind::Quadratic, 5, 1, 1, 5, 1, {}, {}}, {CodegreeKind::Rational, 3, 1, 1, 0, 1, {}, {}}, {CodegreeKind::Quadratic, 5, -1, 1, 5, 1, {}, {}}}, 4749469838762685197ull, true, "non-Schur, non-Drinfeld, non-Czero (3, 3, 2, 2, 4, 3, 3, 3, 3)."},
        {"r5-10", 5, "01234", "10000010000010000010000010100010000001000000100010001000010011100000110001100010000010001110111011110000100010000110111110111", true, {"integral"}, {}, "Rep(S_4)", false, 23.99999999999998, "24", {1.0,1.0,2.0,2.9999999999999973,2.999999999999999}, {{CodegreeKind::Rational, 24, 1, 1, 0, 1, {}, {}}, {CodegreeKind::Rational, 8, 1, 1, 0, 1, {}, {}}, {CodegreeKind::Rational, 4, 1, 1, 0, 2, {}, {}}, {CodegreeKind::Rational, 3, 1, 1, 0, 1, {}, {}}}, 17855413850093835073ull, true, "integral."},
        {"r5-11", 5, "01243", "10000010000010000010000010100010000001000000100010001000010011100000110001100010000010001101111101110000100010000111011101111", true, {"non-modular","weakly group-theoretical"}, {}, "unknown, but see Question", true, 24.000000000000043, "24", {1.0,1.0,2.0,3.0000000000000036,3.0000000000000036}, {{CodegreeKind::Rational, 24, 1, 1, 0, 1, {}, {}}, {CodegreeKind::Rational, 8, 1, 1, 0, 1, {}, {}}, {CodegreeKind::Rational, 4, 1, 1, 0, 2, {}, {}}, {CodegreeKind::Rational, 3, 1, 1, 0, 1, {}, {}}}, 16569862994848626215ull, true, "extension of Rep(S_3), unitarily categorified (see ), non-modular, weakly group-theoretical."},
        {"r5-12", 5, "01234", "10000010000010000010000010100010000000100010000001001000001010101010110011100010001000101110101001110000100001001110011111111", true, {}, {}, "PSU(2)_8", false, 26.180339887498945, "10alpha_5^2 ~ 26.180", {1.0,1.0,2.6180339887498936,2.6180339887498962,3.2360679774997894}, {{CodegreeKind::Quadratic, 15, 5, 1, 5, 1, {}, {}}, {CodegreeKind::Quadratic, 5, 1, 1, 5, 1, {}, {}}, {CodegreeKind::Rational, 5, 1, 1, 0, 1, {}, {}}, {CodegreeKind::Quadratic, 15, -5, 1, 5, 1, {}, {}}, {CodegreeKind::Quadratic, 5, -1, 1, 5, 1, {}, {}}}, 10408593728253419255ull, true, "extension of Vec(C_2)."},
        {"r5-13", 5, "01234", "10000010000010000010000010100011100010010001100111001000100110110001010101100010000110010111010011010000100111010110110111111", false, {"non-Schur","non-Drinfeld","non-Czero","simple"}, {1,1,2,1,1,1,2,4,1}, "", false, 30.142135623730972, "16+10alpha_4 ~ 30.142", {1.0,2.4142135623730963,2.4142135623730963,2.4142135623730963,3.4142135623730954}, {{CodegreeKind::Quadratic, 16, 10, 1, 2, 1, {}, {}}, {CodegreeKind::Rational, 7, 1, 1, 0, 3, {}, {}}, {CodegreeKind::Quadratic, 16, -10, 1, 2, 1, {}, {}}}, 8767810582591270395ull, true, "simple, non-Schur, non-Drinfeld, non-Czero (1, 1, 2, 1, 1, 1, 2, 4, 1)."},
        {"r5-14", 5, "01243", "10000010000010000010000010100010000001000000100010001000010011011001110011100010000010011101111101110000100010001111011101111", false, {"non-cyclo"}, {}, "", false, 31.092342312088334, "~ 31.092", {1.0,1.0,2.9032119259115508,3.214319743377537,3.214319743377539}, {{CodegreeKind::PolyRoots, 0, 0, 1, 0, 1, {-9472,9472,-3600,632,-48,1}, {{31.092342, 1},{5.346316, 1},{np.float64(4.0), 2},{3.561342, 1}}}}, 8490062978763356754ull, true, "non-cyclo."},
        {"r5-15", 5, "01234", "10000010000010000010000010100010000001000000100010001000010011011001110011100010000010011110111011110000100010001110111110111", false, {"non-cyclo"}, {}, "", false, 31.09234231208834, "~ 31.092", {1.0,1.0,2.9032119259115508,3.2143197433775375,3.2143197433775383}, {{CodegreeKind::PolyRoots, 0, 0, 1, 0, 1, {-9472,9472,-3600,632,-48,1}, {{31.092342, 1},{5.346316, 1},{np.float64(4.0), 2},{3.561342, 1}}}}, 14679278380514124548ull, true, "non-cyclo."},
        {"r5-16", 5, "01234", "10000010000010000010000010100010100010100010100011001000101010101010110011100010001010101110111011110000100011001110111111111", true, {"simple"}, {}, "PSU(2)_9", false, 34.646440315116, "alpha_11^8 - 5alpha_11^6 + 8alpha_11^4 - 3alpha_11^2 + 3 ~ 34.646", {1.0,1.9189859472289954,2.6825070656623646,3.2287074151195636,3.5133370916661377}, {{CodegreeKind::PolyRoots, 0, 0, 1, 0, 1, {-14641,14641,-5324,847,-55,1}, {{34.64644, 1},{9.408384, 1},{4.814785, 1},{3.323543, 1},{2.806849, 1}}}}, 932826313170811637ull, true, "simple."},
        {"r6-1", 6, "021435", "100000010000001000000100000010000001010000001000100000000001000100000010001000100000010000000010000001000100000100000001000010010000100000001000000010000100000001100000001000010000000001000010000100001000010000100000", true, {}, {}, "Vec(C_6)", false, 5.999999999999999, "6", {0.9999999999999998,0.9999999999999998,1.0,1.0,1.0,1.0}, {{CodegreeKind::Rational, 6, 1, 1, 0, 6, {}, {}}}, 297174466775810296ull, true, "quadratic (C_3,1,1)."},
        {"r6-2", 6, "021345", "100000010000001000000100000010000001010000001000100000000010000001000100001000100000010000000001000100000010000100000001000010100000001000010000000010000100000001010000100000001000000001000010000100001000010000100000", true, {"noncommutative"}, {}, "Vec(S_3)", false, 5.999999999999999, "6", {0.9999999999999998,0.9999999999999998,1.0,1.0,1.0,1.0}, {}, 3423927704358750138ull, false, "noncommutative, quadratic (C_3,-1,1)."},
        {"r6-3", 6, "012345", "100000010000001000000100000010000001010000100000000100001000000010000001001000000100100000010000000001000010000100001000010000100000000001000010000010000010000001000001110000001100000001000001000010000010001100110000", true, {}, {}, "Vec(C_2) (x) SU(2)_2", false, 8.0, "8", {1.0,1.0,1.0,1.0,1.414213562373095,1.414213562373095}, {{CodegreeKind::Rational, 8, 1, 1, 0, 4, {}, {}}, {CodegreeKind::Rational, 4, 1, 1, 0, 2, {}, {}}}, 11686425335549437212ull, true, "extension of Vec(C_2^2)."},
        {"r6-4", 6, "021354", "100000010000001000000100000010000001010000000100100000001000000001000010001000100000000100010000000001000010000100001000010000100000000010000001000010000001000001000010011000100100000001000010000010000001100100011000", true, {"non-modular","weakly group-theoretical"}, {}, "zesting of Vec(C_2) (x) SU(2)_2, see", true, 8.0, "8", {1.0,1.0,1.0,1.0,1.414213562373095,1.414213562373095}, {{CodegreeKind::Rational, 8, 1, 1, 0, 4, {}, {}}, {CodegreeKind::Rational, 4, 1, 1, 0, 2, {}, {}}}, 17304939915629119888ull, true, "unitarily categorified (see ), extension of Vec(C_4), non-modular, weakly group-theoretical"},
        {"r6-5", 6, "021345", "100000010000001000000100000010000001010000000100100000001000000001000010001000100000000100010000000001000010000100001000010000100000000010000001000010000001000001000010100100011000000001000010000010000001011000100100", true, {"non-modular","weakly group-theoretical"}, {}, "zesting of Vec(C_2) (x) SU(2)_2, see", true, 8.0, "8", {1.0,1.0,1.0,1.0,1.414213562373095,1.414213562373095}, {{CodegreeKind::Rational, 8, 1, 1, 0, 4, {}, {}}, {CodegreeKind::Rational, 4, 1, 1, 0, 2, {}, {}}}, 3613825573762188186ull, true, "unitarily categorified (see ), extension of Vec(C_4), non-modular, weakly group-theoretical"},
        {"r6-6", 6, "012354", "100000010000001000000100000010000001010000100000000100001000000010000001001000000100100000010000000001000010000100001000010000100000000001000010000010000010000001000001001100110000000001000001000010000010110000001100", true, {"non-modular","weakly group-theoretical"}, {}, "zesting of Vec(C_2) (x) SU(2)_2, see", true, 8.0, "8", {1.0,1.0,1.0,1.0,1.414213562373095,1.414213562373095}, {{CodegreeKind::Rational, 8, 1, 1, 0, 4, {}, {}}, {CodegreeKind::Rational, 4, 1, 1, 0, 2, {}, {}}}, 15477002339289257154ull, true, "unitarily categorified (see ), extension of Vec(C_2^2), non-modular, weakly group-theoretical"},
        {"r6-7", 6, "021435", "100000010000001000000100000010000001010000000010100000001000000100000001001000100000000100000010010000000001000100001000000010010000100000000001000010000100010000100000001000000001000001000001000001000001000001111110", true, {}, {}, "TY(C_5)", false, 10.0, "10", {1.0,1.0,1.0,1.0,1.0,2.23606797749979}, {{CodegreeKind::Rational, 10, 1, 1, 0, 2, {}, {}}, {CodegreeKind::Rational, 5, 1, 1, 0, 4, {}, {}}}, 1681573094201613480ull, true, "near-group C_5+0."},
        {"r6-8", 6, "021435", "100000010000001000000100000010000001010000001000100000000001000100000010001000100000010000000010000001000100000100000001000010010010100001001100000010000100000001100001001100010010000001000010000100001100010010100001", true, {}, {}, "Vec(C_3) (x) PSU(2)_3", false, 10.8541019662497, "3alpha_5 + 6 ~ 10.854", {0.9999999999999998,0.9999999999999998,1.0,1.618033988749895,1.6180339887498971,1.618033988749898}, {{CodegreeKind::Quadratic, 15, 3, 2, 5, 3, {}, {}}, {CodegreeKind::Quadratic, 15, -3, 2, 5, 3, {}, {}}}, 12478505954135270069ull, true, "extension of Vec(C_3)."},
        {"r6-9", 6, "021345", "100000010000001000000100000010000001010000000100100000001000000001000010001000100000000100010000000001000010000100001000010000100000000010000001000010000001000001000010100110011001000001000010000010000001011001100110", true, {"integral"}, {}, "Rep(C_3 x| C_4)", false, 12.000000000000004, "12", {1.0,1.0,1.0,1.0,1.9999999999999998,2.000000000000001}, {{CodegreeKind::Rational, 12, 1, 1, 0, 2, {}, {}}, {CodegreeKind::Rational, 6, 1, 1, 0, 2, {}, {}}, {CodegreeKind::Rational, 4, 1, 1, 0, 2, {}, {}}}, 2443909986152672346ull, true, "integral."},
        {"r6-10", 6, "012345", "100000010000001000000100000010000001010000100000000100001000000010000001001000000100100000010000000001000010000100001000010000100000000001000010000010000010000001000001110010001101000001000001000010000010001101110010", true, {"integral"}, {}, "Vec(C_2) (x) Rep(S_3), Rep(D_6)", false, 12.000000000000007, "12", {1.0,1.0,1.0,1.0,1.9999999999999998,2.0000000000000018}, {{CodegreeKind::Rational, 12, 1, 1, 0, 2, {}, {}}, {CodegreeKind::Rational, 6, 1, 1, 0, 2, {}, {}}, {CodegreeKind::Rational, 4, 1, 1, 0, 2, {}, {}}}, 3111636880924645764ull, true, "integral."},
        {"r6-11", 6, "021435", "100000010000001000000100000010000001010000000010100000001000000100000001001000100000000100000010010000000001000100001000000010010000100000000001000010000100010000100000001000000001000001000001000001000001000001111111", false, {"non-Drinfeld"}, {}, "", false, 12.791287847477928, "(sqrt21+21)/2 ~ 12.791", {1.0,1.0,1.0,1.0,1.0,2.7912878474779217}, {{CodegreeKind::Quadratic, 21, 1, 2, 21, 1, {}, {}}, {CodegreeKind::Quadratic, 21, -1, 2, 21, 1, {}, {}}, {CodegreeKind::Rational, 5, 1, 1, 0, 4, {}, {}}}, 1681574193713241691ull, true, "near-group C_5+1, non-Drinfeld."},
        {"r6-12", 6, "012345", "100000010000001000000100000010000001010000100000001000000010000100000001001000001000110000000001000001000110000100000010000001100100010010001001000010000100000001010010100100001001000001000001000110001001001001110110", true, {}, {}, "PSU(2)_3 (x) SU(2)_2", false, 14.47213595499959, "4alpha_5+8 ~ 14.472", {1.0,1.0,1.414213562373095,1.618033988749895,1.618033988749895,2.2882456112707397}, {{CodegreeKind::Quadratic, 10, 2, 1, 5, 2, {}, {}}, {CodegreeKind::Quadratic, 5, 1, 1, 5, 1, {}, {}}, {CodegreeKind::Quadratic, 10, -2, 1, 5, 2, {}, {}}, {CodegreeKind::Quadratic, 5, -1, 1, 5, 1, {}, {}}}, 5489227993308026010ull, true, "extension of Vec(C_2)."},
        {"r6-13", 6, "012345", "100000010000001000000100000010000001010000100000001000000100000010000001001000001000111000000011000101000110000100000100000011110100001001001010000010000010000101001001110010001100000001000001000110001010001100110001", true, {"integral"}, {}, "Rep(C_3 x| S_3)", false, 17.999999999999996, "18", {1.0,1.0,1.9999999999999998,1.9999999999999998,1.9999999999999998,1.9999999999999998}, {{CodegreeKind::Rational, 18, 1, 1, 0, 1, {}, {}}, {CodegreeKind::Rational, 9, 1, 1, 0, 4, {}, {}}, {CodegreeKind::Rational, 2, 1, 1, 0, 1, {}, {}}}, 10562950208495346824ull, true, "integral."},
        {"r6-14", 6, "012345", "100000010000001000000100000010000001010000100000001000000100000010000001001000001000111000000011000101000110000100000100000011110010001100001001000010000010000101001100110001001010000001000001000110001001001010110100", true, {"integral"}, {}, "Rep(D_9)", false, 18.00000000000001, "18", {1.0,1.0,1.9999999999999998,1.9999999999999998,2.000000000000001,2.0000000000000018}, {{CodegreeKind::Rational, 18, 1, 1, 0, 1, {}, {}}, {CodegreeKind::Rational, 9, 1, 1, 0, 4, {}, {}}, {CodegreeKind::Rational, 2, 1, 1, 0, 1, {}, {}}}, 9531512751758625448ull, true, "integral."},
        {"r6-15", 6, "012345", "100000010000001000000100000010000001010000100000000100001000000001000010001000000100100010010001001010000101000100001000010001100010000101001010000010000001001010000101101010010101000001000010000101001010010101101010", true, {}, {}, "SU(2)_5", false, 18.59179388647955, "2(alpha_7^4-alpha_7^2+1) ~ 18.592", {1.0,1.0,1.8019377358048385,1.8019377358048398,2.2469796037174667,2.246979603717467}, {{CodegreeKind::PolyRoots, 0, 0, 1, 0, 1, {-392,196,-28,1}, {{18.591794, 1},{5.725873, 1},{3.682333, 1}}}}, 472793004356554500ull, true, "extension of Vec(C_2)"},
        {"r6-16", 6, "021354", "100000010000001000000100000010000001010000000100100000001000000001000010001000100000000100010000000001000010000100001000010000100000000010000001000010000001000001000010011011100111000001000010000010000001100111011011", false, {"non-Drinfeld"}, {}, "", false, 18.92820323027553, "12+4alpha_6 ~ 18.928", {1.0,1.0,1.0,1.0,2.732050807568879,2.732050807568879}, {{CodegreeKind::Quadratic, 12, 4, 1, 3, 1, {}, {}}, {CodegreeKind::Rational, 8, 1, 1, 0, 2, {}, {}}, {CodegreeKind::Quadratic, 12, -4, 1, 3, 1, {}, {}}, {CodegreeKind::Rational, 4, 1, 1, 0, 2, {}, {}}}, 14107508596214530056ull, true, "extension of Vec(C_4), non-Drinfeld."},
        {"r6-17", 6, "012354", "100000010000001000000100000010000001010000100000000100001000000010000001001000000100100000010000000001000010000100001000010000100000000001000010000010000010000001000001001111110011000001000001000010000010110011001111", false, {"non-Drinfeld"}, {}, "", false, 18.928203230275518, "12+4alpha_6 ~ 18.928", {1.0,1.0,1.0,1.0,2.732050807568877,2.732050807568879}, {{CodegreeKind::Quadratic, 12, 4, 1, 3, 1, {}, {}}, {CodegreeKind::Rational, 8, 1, 1, 0, 2, {}, {}}, {CodegreeKind::Quadratic, 12, -4, 1, 3, 1, {}, {}}, {CodegreeKind::Rational, 4, 1, 1, 0, 2, {}, {}}}, 1899459354446377242ull, true, "extension of Vec(C_2^2), non-Drinfeld."},
        {"r6-18", 6, "021345", "100000010000001000000100000010000001010000000100100000001000000001000010001000100000000100010000000001000010000100001000010000100000000010000001000010000001000001000010100111011011000001000010000010000001011011100111", false, {"non-Drinfeld"}, {}, "", false, 18.928203230275532, "12+4alpha_6 ~ 18.928", {1.0,1.0,1.0,1.0,2.7320508075688785,2.7320508075688803}, {{CodegreeKind::Quadratic, 12, 4, 1, 3, 1, {}, {}}, {CodegreeKind::Rational, 8, 1, 1, 0, 2, {}, {}}, {CodegreeKind::Quadratic, 12, -4, 1, 3, 1, {}, {}}, {CodegreeKind::Rational, 4, 1, 1, 0, 2, {}, {}}}, 14443211794133918962ull, true, "extension of Vec(C_4), non-Drinfeld."},
        {"r6-19", 6, "012345", "100000010000001000000100000010000001010000100000000100001000000010000001001000000100100000010000000001000010000100001000010000100000000001000010000010000010000001000001110011001111000001000001000010000010001111110011", false, {"non-Drinfeld"}, {}, "", false, 18.928203230275532, "12+4alpha_6 ~ 18.928", {1.0,1.0,1.0,1.0,2.7320508075688785,2.7320508075688803}, {{CodegreeKind::Quadratic, 12, 4, 1, 3, 1, {}, {}}, {CodegreeKind::Rational, 8, 1, 1, 0, 2, {}, {}}, {CodegreeKind::Quadratic, 12, -4, 1, 3, 1, {}, {}}, {CodegreeKind::Rational, 4, 1, 1, 0, 2, {}, {}}}, 18251671136471661236ull, true, "extension of Vec(C_2^2), non-Drinfeld."},
        {"r6-20", 6, "012345", "100000010000001000000100000010000001010000100000001000000100000001000010001000001000110100001100000011000011000100000100001100111000000011000011000010000001000011000011101100011100000001000010000011000011011100101100", true, {}, {}, "SO(5)_2", false, 20.000000000000007, "20", {1.0,1.0,2.0,2.0,2.2360679774997902,2.2360679774997902}, {{CodegreeKind::Rational, 20, 1, 1, 0, 2, {}, {}}, {CodegreeKind::Rational, 5, 1, 1, 0, 2, {}, {}}, {CodegreeKind::Rational, 4, 1, 1, 0, 2, {}, {}}}, 179912509799242574ull, true, "extension of Rep(D_5)."},
        {"r6-21", 6, "012354", "100000010000001000000100000010000001010000100000001000000100000001000010001000001000110100001100000011000011000100000100001100111000000011000011000010000001000011000011011100101100000001000010000011000011101100011100", true, {"non-modular","weakly group-theoretical"}, {}, "zesting of SO(5)_2, see", true, 19.999999999999993, "20", {1.0,1.0,2.0,2.0,2.236067977499789,2.236067977499789}, {{CodegreeKind::Rational, 20, 1, 1, 0, 2, {}, {}}, {CodegreeKind::Rational, 5, 1, 1, 0, 2, {}, {}}, {CodegreeKind::Rational, 4, 1, 1, 0, 2, {}, {}}}, 9241023042142194740ull, true, "extension of Rep(D_5), unitarily categorified (see ), non-modular, weakly group-theoretical"},
        {"r6-22", 6, "021435", "100000010000001000000100000010000001010000001000100000000001000100000010001000100000010000000010000001000100000100000001000010010101100110001011000010000100000001100110001011010101000001000010000100001011010101100110", false, {"non-Schur","non-Drinfeld"}, {}, "", false, 20.485281374238543, "12+6alpha_4 ~ 20.485", {0.9999999999999998,0.9999999999999998,1.0,2.4142135623730905,2.4142135623730923,2.4142135623730967}, {{CodegreeKind::Quadratic, 12, 6, 1, 2, 1, {}, {}}, {CodegreeKind::Quadratic, 15, 3, 2, 5, 2, {}, {}}, {CodegreeKind::Quadratic, 15, -3, 2, 5, 2, {}, {}}, {CodegreeKind::Quadratic, 12, -6, 1, 2, 1, {}, {}}}, 5587818684070046120ull, true, "non-Schur, non-Drinfeld."},
        {"r6-23", 6, "012345", "100000010000001000000100000010000001010000100000000100001000000010000001001000000100101000010100000001000011000100001000010100101000000001000011000010000010000001000001110010001101000001000001000011000011001101111111", true, {}, {}, "PSU(2)_3 (x) Rep(S_3)", false, 21.708203932499355, "12+6alpha_5 ~ 21.708", {1.0,1.0,1.618033988749895,1.618033988749895,1.9999999999999998,3.2360679774997876}, {{CodegreeKind::Quadratic, 15, 3, 1, 5, 1, {}, {}}, {CodegreeKind::Quadratic, 15, 3, 2, 5, 1, {}, {}}, {CodegreeKind::Quadratic, 15, -3, 1, 5, 1, {}, {}}, {CodegreeKind::Quadratic, 5, 1, 1, 5, 1, {}, {}}, {CodegreeKind::Quadratic, 15, -3, 2, 5, 1, {}, {}}, {CodegreeKind::Quadratic, 5, -1, 1, 5, 1, {}, {}}}, 12317076890734794109ull, true, "extension of Vec(C_2)."},
        {"r6-24", 6, "012345", "100000010000001000000100000010000001010000100000001000000100000001000010001000001000110100001100000011000011000100000100001100111000000011000011000010000001000011000011101110011101000001000010000011000011011101101110", false, {"non-Schur","non-Drinfeld"}, {}, "", false, 25.582575694955835, "21+sqrt21 ~ 25.583", {1.0,1.0,2.0,2.0,2.7912878474779195,2.79128784747792}, {{CodegreeKind::Quadratic, 21, 1, 1, 21, 1, {}, {}}, {CodegreeKind::Quadratic, 21, -1, 1, 21, 1, {}, {}}, {CodegreeKind::Quadratic, 5, 1, 1, 5, 1, {}, {}}, {CodegreeKind::Rational, 5, 1, 1, 0, 2, {}, {}}, {CodegreeKind::Quadratic, 5, -1, 1, 5, 1, {}, {}}}, 17813055695067070838ull, true, "extension of Rep(D_5), non-Schur, non-Drinfeld."},
        {"r6-25", 6, "012345", "100000010000001000000100000010000001010000100000001000000100000010000001001000001000111000000011000101000110000100000100000011110110001101001011000010000010000101001101110011001110000001000001000110001011001110110101", false, {"non-Schur","non-Drinfeld","non-Czero"}, {3,3,3,2,5,4,3,4,3}, "", false, 28.39230484541322, "18+6alpha_6 ~ 28.392", {1.0,1.0,1.9999999999999998,2.732050807568874,2.732050807568875,2.732050807568875}, {{CodegreeKind::Quadratic, 18, 6, 1, 3, 1, {}, {}}, {CodegreeKind::Rational, 9, 1, 1, 0, 3, {}, {}}, {CodegreeKind::Quadratic, 18, -6, 1, 3, 1, {}, {}}, {CodegreeKind::Rational, 2, 1, 1, 0, 1, {}, {}}}, 7906725530735289373ull, true, "non-Schur, non-Drinfeld, non-Czero (3, 3, 3, 2, 5, 4, 3, 4, 3)."},
        {"r6-26", 6, "012345", "100000010000001000000100000010000001010000100000001000000100000010000001001000001000111000000011000101000110000100000100000011110011001110001101000010000010000101001110110101001011000001000001000110001101001011110110", false, {"non-Schur","non-Drinfeld","non-Czero"}, {3,3,4,2,5,4,4,4,3}, "", false, 28.39230484541326, "18+6alpha_6 ~ 28.392", {1.0,1.0,1.9999999999999998,2.732050807568876,2.7320508075688776,2.7320508075688785}, {{CodegreeKind::Quadratic, 18, 6, 1, 3, 1, {}, {}}, {CodegreeKind::Rational, 9, 1, 1, 0, 3, {}, {}}, {CodegreeKind::Quadratic, 18, -6, 1, 3, 1, {}, {}}, {CodegreeKind::Rational, 2, 1, 1, 0, 1, {}, {}}}, 4762053668529504973ull, true, "non-Schur, non-Drinfeld, non-Czero (3, 3, 4, 2, 5, 4, 4, 4, 3)."},
        {"r6-27", 6, "012345", "100000010000001000000100000010000001010000110000000010000001001010000101001000000010100100001100010001000011000100000001001100101100000011010011000010001010010001000011110101001111000001000101000011010011001111111111", true, {"perfect"}, {}, "PSU(2)_3 (x) PSU(2)_5", false, 33.63287109655776, "(alpha_5+2)(alpha_7^4-alpha_7^2+1) ~ 33.633", {1.0,1.618033988749895,1.8019377358048385,2.2469796037174667,2.915596502143257,3.635689370842632}, {{CodegreeKind::PolyRoots, 0, 0, 1, 0, 1, {300125,-300125,111475,-19600,1715,-70,1}, {{33.632871, 1},{12.846614, 1},{10.358202, 1},{6.661403, 1},{3.956481, 1},{2.544429, 1}}}}, 1083426893840091194ull, true, "perfect."},
        {"r6-28", 6, "012354", "100000010000001000000100000010000001010000100000001000000100000001000010001000001000110100001100000011000011000100000100001100111000000011000011000010000001000011000011011111101111000001000010000011000011101111011111", false, {"non-Drinfeld"}, {}, "", false, 33.797958971132694, "24+4sqrt6 ~ 33.798", {1.0,1.0,2.0,2.0,3.4494897427831757,3.449489742783178}, {{CodegreeKind::Quadratic, 24, 4, 1, 6, 1, {}, {}}, {CodegreeKind::Quadratic, 24, -4, 1, 6, 1, {}, {}}, {CodegreeKind::Rational, 5, 1, 1, 0, 2, {}, {}}, {CodegreeKind::Rational, 4, 1, 1, 0, 2, {}, {}}}, 3320343214738858708ull, true, "extension of Rep(D_5), non-Drinfeld."},
        {"r6-29", 6, "012345", "100000010000001000000100000010000001010000100000001000000100000001000010001000001000110100001100000011000011000100000100001100111000000011000011000010000001000011000011101111011111000001000010000011000011011111101111", false, {"non-Drinfeld"}, {}, "", false, 33.79795897113274, "24+4sqrt6 ~ 33.798", {1.0,1.0,2.0,2.0,3.4494897427831805,3.4494897427831805}, {{CodegreeKind::Quadratic, 24, 4, 1, 6, 1, {}, {}}, {CodegreeKind::Quadratic, 24, -4, 1, 6, 1, {}, {}}, {CodegreeKind::Rational, 5, 1, 1, 0, 2, {}, {}}, {CodegreeKind::Rational, 4, 1, 1, 0, 2, {}, {}}}, 14092091092311108014ull, true, "extension of Rep(D_5), non-Drinfeld."},
        {"r6-30", 6, "021435", "100000010000001000000100000010000001010000001000100000000001000100000010001000100000010000000010000001000100000100000001000010010111100111001111000010000100000001100111001111010111000001000010000100001111010111100111", false, {"non-Drinfeld"}, {}, "", false, 35.72498073958799, "(39+9sqrt13)/2 ~ 35.725", {0.9999999999999998,0.9999999999999998,1.0,3.3027756377319957,3.302775637731996,3.3027756377319974}, {{CodegreeKind::Quadratic, 39, 9, 2, 13, 1, {}, {}}, {CodegreeKind::Rational, 6, 1, 1, 0, 4, {}, {}}, {CodegreeKind::Quadratic, 39, -9, 2, 13, 1, {}, {}}}, 14993683731944692333ull, true, "extension of Vec(C_3), quadratic (C_3,1,1), non-Drinfeld."},
        {"r6-31", 6, "021345", "100000010000001000000100000010000001010000001000100000000010000001000100001000100000010000000001000100000010000100000001000010100111001111010111000010000100000001010111100111001111000001000010000100001111010111100111", true, {"noncommutative"}, {}, "Haagerup H_6", false, 35.724980739587956, "(39+9sqrt13)/2 ~ 35.725", {0.9999999999999998,0.9999999999999998,1.0,3.3027756377319943,3.302775637731995,3.3027756377319957}, {}, 4320915744611349423ull, false, "noncommutative, extension of Vec(C_3), quadratic (C_3,-1,1)."},
        {"r6-32", 6, "012354", "100000010000001000000100000010000001010000100000000100001000000001000010001000000100100011010011001110001101000100001000010011100011001101001110000010000001001110001101010111101011000001000010001101001110101011010111", false, {"non-Schur","non-cyclo","non-Czero"}, {2,4,4,2,2,4,5,2,2}, "", false, 36.779242611882175, "~ 36.779", {1.0,1.0,2.709275359436921,2.7092753594369223,3.1700864866260394,3.1700864866260394}, {{CodegreeKind::PolyRoots, 0, 0, 1, 0, 1, {303104,-303104,112768,-19936,1760,-72,1}, {{36.779243, 1},{12.682439, 1},{8.000001, 1},{7.999999, 1},{4.0, 1},{2.538319, 1}}}}, 8670085758044697538ull, true, "non-Schur, non-cyclo, non-Czero (2, 4, 4, 2, 2, 4, 5, 2, 2)."},
        {"r6-33", 6, "012345", "100000010000001000000100000010000001010000100000000100001000000001000010001000000100100011010011001110001101000100001000010011100011001101001110000010000001001110001101101011010111000001000010001101001110010111101011", false, {"non-Schur","non-cyclo","non-Czero"}, {2,4,4,2,2,4,5,3,2}, "", false, 36.77924261188212, "~ 36.779", {1.0,1.0,2.709275359436921,2.7092753594369223,3.170086486626034,3.170086486626036}, {{CodegreeKind::PolyRoots, 0, 0, 1, 0, 1, {303104,-303104,112768,-19936,1760,-72,1}, {{36.779243, 1},{12.682439, 1},{8.000001, 1},{7.999999, 1},{4.0, 1},{2.538319, 1}}}}, 9430493848302463100ull, true, "non-Schur, non-cyclo, non-Czero (2, 4, 4, 2, 2, 4, 5, 3, 2)."},
        {"r6-34", 6, "012345", "100000010000001000000100000010000001010000100000000100001000000001000010001000000100101010010101001011000111000100001000010101101010000111001011000010000001001011000111101111011111000001000010000111001011011111101111", true, {}, {}, "PSU(2)_10", false, 44.784609690826535, "24+12alpha_6 ~ 44.785", {1.0,1.0,2.7320508075688754,2.732050807568879,3.7320508075688763,3.7320508075688794}, {{CodegreeKind::Quadratic, 24, 12, 1, 3, 1, {}, {}}, {CodegreeKind::Rational, 12, 1, 1, 0, 1, {}, {}}, {CodegreeKind::Rational, 6, 1, 1, 0, 2, {}, {}}, {CodegreeKind::Rational, 4, 1, 1, 0, 1, {}, {}}, {CodegreeKind::Quadratic, 24, -12, 1, 3, 1, {}, {}}}, 14306264825928826116ull, true, "extension of Vec(C_2)."},
        {"r6-35", 6, "012354", "100000010000001000000100000010000001010000100000001000000100000001000010001000001000111100001011000111000111000100000100001011110111001111001111000010000001000111001111011111101111000001000010000111001111101111011111", false, {"non-Schur","non-cyclo","non-Czero"}, {2,2,3,2,2,2,3,4,2}, "", false, 55.14421356215018, "~ 55.144", {1.0,1.0,2.935432331970032,3.6813306436049773,3.9354323319700284,3.9354323319700297}, {{CodegreeKind::PolyRoots, 0, 0, 1, 0, 1, {234496,-234496,92848,-18312,1839,-83,1}, {{55.144214, 1},{8.0, 1},{7.312789, 1},{4.542997, 1},{4.000001, 1},{3.999999, 1}}}}, 6590711587479331549ull, true, "extension of Vec(C_2), non-Schur, non-cyclo, non-Czero (2, 2, 3, 2, 2, 2, 3, 4, 2)."},
        {"r6-36", 6, "012345", "100000010000001000000100000010000001010000100000001000000100000001000010001000001000111100001011000111000111000100000100001011110111001111001111000010000001000111001111101111011111000001000010000111001111011111101111", false, {"non-Schur","non-cyclo","non-Czero"}, {2,2,3,2,2,2,3,4,2}, "", false, 55.14421356215024, "~ 55.144", {1.0,1.0,2.935432331970032,3.6813306436049773,3.935432331970033,3.9354323319700333}, {{CodegreeKind::PolyRoots, 0, 0, 1, 0, 1, {234496,-234496,92848,-18312,1839,-83,1}, {{55.144214, 1},{8.0, 1},{7.312789, 1},{4.542997, 1},{4.000001, 1},{3.999999, 1}}}}, 5943961948625014447ull, true, "extension of Vec(C_2), non-Schur, non-cyclo, non-Czero (2, 2, 3, 2, 2, 2, 3, 4, 2)."},
        {"r6-37", 6, "012345", "100000010000001000000100000010000001010000101000010100001010000101000011001000010100101010010101001011000111000100001010010101101011010111001111000010000101001011010111101111011111000001000011000111001111011111111111", true, {"simple"}, {}, "PSU(2)_11", false, 56.74676504868584, "alpha_13^10 - 7alpha_13^8 + 17alpha_13^6 - 16alpha_13^4 + 6alpha_13^2 + 3 ~ 56.747", {1.0,1.9418836348521054,2.7709120513064205,3.4389051311943066,3.9070415447687306,4.148114905279373}, {{CodegreeKind::PolyRoots, 0, 0, 1, 0, 1, {371293,-371293,142805,-26364,2366,-91,1}, {{56.746765, 1},{15.048552, 1},{7.390871, 1},{4.798447, 1},{3.717449, 1},{3.297916, 1}}}}, 12146459848397865073ull, true, "simple."},
        {"r6-38", 6, "012345", "100000010000001000000100000010000001010000111100011001010011000111001111001000011001110110001101001011010111000100010011001101101110010101011011000010000111001011010101111010011101000001001111010111011011011101111111", false, {"non-Schur","non-Drinfeld","non-Czero","simple","not of Frobenius type"}, {1,1,3,1,1,1,3,4,1}, "", false, 63.14718584144384, "(65+17sqrt13)/2 ~ 63.147", {1.0,3.3027756377319912,3.3027756377319912,3.3027756377319912,3.302775637731994,4.302775637731995}, {{CodegreeKind::Quadratic, 65, 17, 2, 13, 1, {}, {}}, {CodegreeKind::Rational, 9, 1, 1, 0, 4, {}, {}}, {CodegreeKind::Quadratic, 65, -17, 2, 13, 1, {}, {}}}, 14612908606329645143ull, true, "simple, non-Schur, cyclo but not of Frobenius type, non-Drinfeld, non-Czero (1, 1, 3, 1, 1, 1, 3, 4, 1)."},
        {"r6-39", 6, "012345", "100000010000001000000100000010000001010000101110011001010101010011001111001000011001110110001101001011010111000100010101001101111010000111011011000010010011001011000111111100011101000001001111010111011011011101111111", false, {"non-Schur","non-Drinfeld","simple","not of Frobenius type"}, {}, "", false, 63.147185841443886, "(65+17sqrt13)/2 ~ 63.147", {1.0,3.302775637731994,3.302775637731994,3.302775637731994,3.302775637731994,4.302775637731995}, {{CodegreeKind::Quadratic, 65, 17, 2, 13, 1, {}, {}}, {CodegreeKind::Rational, 9, 1, 1, 0, 4, {}, {}}, {CodegreeKind::Quadratic, 65, -17, 2, 13, 1, {}, {}}}, 7519039275831810895ull, true, "simple, non-Schur, cyclo but not of Frobenius type, non-Drinfeld."},
        {"r7-1", 7, "0123456", "1000000010000000100000001000000010000000100000001010000010000000001000001000000001000000010000000100100000001000100000001000000000100000000100000100001000001000001000001000000000010000000010000010000010000001000000100000010011110000000011000001100000100000010000000100000010000011110011100111110000001000000100000100000010000001100111111100111", false, {}, {}, "rank-7 Isaacs-counterexample candidate", false, 28.944271909999173, "20+4sqrt(5)", {1.0,1.0,1.0,1.0,2.0,3.236067977499787,3.236067977499794}, {}, 13694719244569726693ull, true, ""},
        {"r7-2", 7, "0123456", "1000000010000000100000001000000010000000100000001010000010000000010000000010000010000000001000001000100000010000111000000011000001100000001100000110001000000010000011001011010011010100010110000111000010000010000001100011010110110100000111000101100000100000001000001100010110000111101110001111000000001000001000000110000111000101101111001011100", false, {"integral","non-Czero"}, {3,3,2,2,4,3,3,3,3}, "rank-7 integral non-Czero ring", false, 41.999999999999986, "42", {1.0,1.0,2.0,2.9999999999999973,2.9999999999999982,3.0000000000000004,3.0000000000000004}, {}, 15105438380347900568ull, true, ""},
    };
    return data;
}

} // namespace fusion

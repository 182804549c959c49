#include "gronwall/table_reference.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "gronwall/errors.hpp"
#include "gronwall/render.hpp"

namespace gw::reference {
namespace {

// 82 rows, omega 9..90. The Corrected edition is recomputed from scratch;
// the Printed edition reproduces the historically published table, whose
// rows 25, 43, 56, 58, 60, 62 and 88 are defective (stale argmaxes at 58,
// 60 and 88, a mangled factorization at 43, off-by-one log roundings at
// 25, 56 and 62).
constexpr std::array<ReferenceRow, 82> kCorrected{{
    {9, "2^5*3^2*5*7", 20, 92, 11, false},
    {10, "2^5*3^2*5*7*11", 25, 116, 13, false},
    {11, "2^5*3^2*5*7*11*13", 32, 142, 17, false},
    {12, "2^5*3^3*5*7*11*13", 35, 153, 17, false},
    {13, "2^5*3^3*5^2*7*11*13", 39, 169, 17, false},
    {14, "2^5*3^3*5^2*7*11*13*17", 46, 197, 19, true},
    {15, "2^5*3^3*5^2*7*11*13*17*19", 55, 227, 23, false},
    {16, "2^5*3^3*5^2*7*11*13*17*19*23", 62, 258, 29, false},
    {17, "2^6*3^3*5^2*7*11*13*17*19*23", 63, 265, 29, false},
    {18, "2^6*3^3*5^2*7*11*13*17*19*23*29", 74, 299, 31, false},
    {19, "2^6*3^3*5^2*7*11*13*17*19*23*29*31", 85, 333, 37, false},
    {20, "2^6*3^3*5^2*7^2*11*13*17*19*23*29*31", 91, 352, 37, false},
    {21, "2^6*3^4*5^2*7^2*11*13*17*19*23*29*31", 94, 363, 37, false},
    {22, "2^6*3^4*5^2*7^2*11*13*17*19*23*29*31*37", 106, 400, 41, false},
    {23, "2^6*3^4*5^2*7^2*11*13*17*19*23*29*31*37*41", 116, 437, 43, true},
    {24, "2^6*3^4*5^2*7^2*11*13*17*19*23*29*31*37*41*43", 127, 474, 47, true},
    {25, "2^6*3^4*5^2*7^2*11*13*17*19*23*29*31*37*41*43*47", 137, 513, 53, false},
    {26, "2^7*3^4*5^2*7^2*11*13*17*19*23*29*31*37*41*43*47", 138, 520, 53, false},
    {27, "2^7*3^4*5^2*7^2*11*13*17*19*23*29*31*37*41*43*47*53", 149, 559, 59, false},
    {28, "2^7*3^4*5^2*7^2*11*13*17*19*23*29*31*37*41*43*47*53*59", 162, 600, 61, false},
    {29, "2^7*3^4*5^2*7^2*11*13*17*19*23*29*31*37*41*43*47*53*59*61", 176, 641, 67, false},
    {30, "2^7*3^4*5^3*7^2*11*13*17*19*23*29*31*37*41*43*47*53*59*61", 181, 657, 67, false},
    {31, "2^7*3^4*5^3*7^2*11*13*17*19*23*29*31*37*41*43*47*53*59*61*67", 196, 699, 71, false},
    {32, "2^7*3^4*5^3*7^2*11*13*17*19*23*29*31*37*41*43*47*53*59*61*67*71", 212, 742, 73, true},
    {33, "2^7*3^4*5^3*7^2*11*13*17*19*23*29*31*37*41*43*47*53*59*61*67*71*73", 224, 785, 79, false},
    {34, "2^7*3^4*5^3*7^2*11^2*13*17*19*23*29*31*37*41*43*47*53*59*61*67*71*73", 231, 809, 79, true},
    {35, "2^7*3^4*5^3*7^2*11^2*13*17*19*23*29*31*37*41*43*47*53*59*61*67*71*73*79", 246, 853, 83, true},
    {36, "2^7*3^4*5^3*7^2*11^2*13*17*19*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83", 259, 897, 89, true},
    {37, "2^7*3^4*5^3*7^2*11^2*13*17*19*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89", 272, 942, 97, false},
    {38, "2^8*3^4*5^3*7^2*11^2*13*17*19*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89", 273, 949, 97, false},
    {39, "2^8*3^5*5^3*7^2*11^2*13*17*19*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89", 276, 960, 97, false},
    {40, "2^8*3^5*5^3*7^2*11^2*13*17*19*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97", 288, 1005, 101, false},
    {41, "2^8*3^5*5^3*7^2*11^2*13*17*19*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101", 299, 1052, 103, true},
    {42, "2^8*3^5*5^3*7^2*11^2*13*17*19*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103", 311, 1098, 107, true},
    {43, "2^8*3^5*5^3*7^2*11^2*13^2*17*19*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103", 317, 1124, 107, true},
    {44, "2^7*3^5*5^3*7^2*11^2*13^2*17*19*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109", 341, 1210, 113, true},
    {45, "2^7*3^5*5^3*7^2*11^2*13^2*17*19*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113", 354, 1258, 127, false},
    {46, "2^8*3^5*5^3*7^2*11^2*13^2*17*19*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113", 356, 1264, 127, false},
    {47, "2^8*3^5*5^3*7^2*11^2*13^2*17*19*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127", 368, 1313, 131, true},
    {48, "2^8*3^5*5^3*7^2*11^2*13^2*17*19*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131", 380, 1362, 137, false},
    {49, "2^8*3^5*5^3*7^2*11^2*13^2*17*19*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131*137", 394, 1411, 139, true},
    {50, "2^8*3^5*5^3*7^2*11^2*13^2*17*19*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131*137*139", 408, 1460, 149, false},
    {51, "2^9*3^5*5^3*7^2*11^2*13^2*17*19*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131*137*139", 409, 1467, 149, false},
    {52, "2^8*3^5*5^3*7^2*11^2*13^2*17*19*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131*137*139*149*151", 438, 1560, 157, false},
    {53, "2^9*3^5*5^3*7^2*11^2*13^2*17*19*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131*137*139*149*151", 440, 1567, 157, false},
    {54, "2^8*3^5*5^3*7^3*11^2*13^2*17*19*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131*137*139*149*151*157", 458, 1630, 163, true},
    {55, "2^9*3^5*5^3*7^3*11^2*13^2*17*19*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131*137*139*149*151*157", 459, 1637, 163, true},
    {56, "2^9*3^5*5^3*7^3*11^2*13^2*17*19*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131*137*139*149*151*157*163", 476, 1688, 167, true},
    {57, "2^9*3^5*5^3*7^3*11^2*13^2*17*19*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131*137*139*149*151*157*163*167", 493, 1739, 173, true},
    {58, "2^9*3^5*5^3*7^3*11^2*13^2*17^2*19*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131*137*139*149*151*157*163*167", 502, 1768, 173, true},
    {59, "2^9*3^5*5^3*7^3*11^2*13^2*17^2*19*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131*137*139*149*151*157*163*167*173", 519, 1819, 179, true},
    {60, "2^9*3^5*5^3*7^3*11^2*13^2*17^2*19*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131*137*139*149*151*157*163*167*173*179", 537, 1871, 181, true},
    {61, "2^9*3^5*5^3*7^3*11^2*13^2*17^2*19*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131*137*139*149*151*157*163*167*173*179*181", 555, 1923, 191, true},
    {62, "2^9*3^5*5^3*7^3*11^2*13^2*17^2*19*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131*137*139*149*151*157*163*167*173*179*181*191", 575, 1976, 193, true},
    {63, "2^9*3^5*5^3*7^3*11^2*13^2*17^2*19*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131*137*139*149*151*157*163*167*173*179*181*191*193", 596, 2028, 197, true},
    {64, "2^9*3^5*5^3*7^3*11^2*13^2*17^2*19*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131*137*139*149*151*157*163*167*173*179*181*191*193*197", 613, 2081, 199, true},
    {65, "2^9*3^5*5^3*7^3*11^2*13^2*17^2*19*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131*137*139*149*151*157*163*167*173*179*181*191*193*197*199", 628, 2134, 211, true},
    {66, "2^9*3^5*5^3*7^3*11^2*13^2*17^2*19*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131*137*139*149*151*157*163*167*173*179*181*191*193*197*199*211", 643, 2188, 223, false},
    {67, "2^9*3^5*5^3*7^3*11^2*13^2*17^2*19^2*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131*137*139*149*151*157*163*167*173*179*181*191*193*197*199*211", 653, 2217, 223, false},
    {68, "2^9*3^5*5^3*7^3*11^2*13^2*17^2*19^2*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131*137*139*149*151*157*163*167*173*179*181*191*193*197*199*211*223", 670, 2271, 227, true},
    {69, "2^9*3^5*5^3*7^3*11^2*13^2*17^2*19^2*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131*137*139*149*151*157*163*167*173*179*181*191*193*197*199*211*223*227", 685, 2325, 229, true},
    {70, "2^9*3^5*5^3*7^3*11^2*13^2*17^2*19^2*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131*137*139*149*151*157*163*167*173*179*181*191*193*197*199*211*223*227*229", 701, 2380, 233, true},
    {71, "2^9*3^5*5^3*7^3*11^2*13^2*17^2*19^2*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131*137*139*149*151*157*163*167*173*179*181*191*193*197*199*211*223*227*229*233", 717, 2434, 239, true},
    {72, "2^9*3^5*5^3*7^3*11^2*13^2*17^2*19^2*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131*137*139*149*151*157*163*167*173*179*181*191*193*197*199*211*223*227*229*233*239", 733, 2489, 241, true},
    {73, "2^9*3^5*5^3*7^3*11^2*13^2*17^2*19^2*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131*137*139*149*151*157*163*167*173*179*181*191*193*197*199*211*223*227*229*233*239*241", 748, 2544, 251, true},
    {74, "2^9*3^5*5^4*7^3*11^2*13^2*17^2*19^2*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131*137*139*149*151*157*163*167*173*179*181*191*193*197*199*211*223*227*229*233*239*241", 752, 2560, 251, true},
    {75, "2^9*3^6*5^4*7^3*11^2*13^2*17^2*19^2*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131*137*139*149*151*157*163*167*173*179*181*191*193*197*199*211*223*227*229*233*239*241", 755, 2571, 251, true},
    {76, "2^9*3^6*5^4*7^3*11^2*13^2*17^2*19^2*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131*137*139*149*151*157*163*167*173*179*181*191*193*197*199*211*223*227*229*233*239*241*251", 774, 2626, 257, true},
    {77, "2^9*3^6*5^4*7^3*11^2*13^2*17^2*19^2*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131*137*139*149*151*157*163*167*173*179*181*191*193*197*199*211*223*227*229*233*239*241*251*257", 791, 2682, 263, true},
    {78, "2^9*3^6*5^4*7^3*11^2*13^2*17^2*19^2*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131*137*139*149*151*157*163*167*173*179*181*191*193*197*199*211*223*227*229*233*239*241*251*257*263", 808, 2737, 269, true},
    {79, "2^9*3^6*5^4*7^3*11^2*13^2*17^2*19^2*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131*137*139*149*151*157*163*167*173*179*181*191*193*197*199*211*223*227*229*233*239*241*251*257*263*269", 825, 2793, 271, true},
    {80, "2^9*3^6*5^4*7^3*11^2*13^2*17^2*19^2*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131*137*139*149*151*157*163*167*173*179*181*191*193*197*199*211*223*227*229*233*239*241*251*257*263*269*271", 842, 2849, 277, true},
    {81, "2^9*3^6*5^4*7^3*11^2*13^2*17^2*19^2*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131*137*139*149*151*157*163*167*173*179*181*191*193*197*199*211*223*227*229*233*239*241*251*257*263*269*271*277", 859, 2906, 281, true},
    {82, "2^9*3^6*5^4*7^3*11^2*13^2*17^2*19^2*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131*137*139*149*151*157*163*167*173*179*181*191*193*197*199*211*223*227*229*233*239*241*251*257*263*269*271*277*281", 874, 2962, 283, true},
    {83, "2^9*3^6*5^4*7^3*11^2*13^2*17^2*19^2*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131*137*139*149*151*157*163*167*173*179*181*191*193*197*199*211*223*227*229*233*239*241*251*257*263*269*271*277*281*283", 889, 3018, 293, true},
    {84, "2^9*3^6*5^4*7^3*11^2*13^2*17^2*19^2*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131*137*139*149*151*157*163*167*173*179*181*191*193*197*199*211*223*227*229*233*239*241*251*257*263*269*271*277*281*283*293", 903, 3075, 307, true},
    {85, "2^10*3^6*5^4*7^3*11^2*13^2*17^2*19^2*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131*137*139*149*151*157*163*167*173*179*181*191*193*197*199*211*223*227*229*233*239*241*251*257*263*269*271*277*281*283*293", 904, 3082, 307, true},
    {86, "2^10*3^6*5^4*7^3*11^2*13^2*17^2*19^2*23^2*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131*137*139*149*151*157*163*167*173*179*181*191*193*197*199*211*223*227*229*233*239*241*251*257*263*269*271*277*281*283*293", 912, 3114, 307, true},
    {87, "2^10*3^6*5^4*7^3*11^2*13^2*17^2*19^2*23^2*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131*137*139*149*151*157*163*167*173*179*181*191*193*197*199*211*223*227*229*233*239*241*251*257*263*269*271*277*281*283*293*307", 927, 3171, 311, true},
    {88, "2^9*3^6*5^4*7^3*11^2*13^2*17^2*19^2*23^2*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131*137*139*149*151*157*163*167*173*179*181*191*193*197*199*211*223*227*229*233*239*241*251*257*263*269*271*277*281*283*293*307*311*313", 956, 3279, 317, true},
    {89, "2^9*3^6*5^4*7^3*11^2*13^2*17^2*19^2*23^2*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131*137*139*149*151*157*163*167*173*179*181*191*193*197*199*211*223*227*229*233*239*241*251*257*263*269*271*277*281*283*293*307*311*313*317", 971, 3336, 331, true},
    {90, "2^10*3^6*5^4*7^3*11^2*13^2*17^2*19^2*23^2*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131*137*139*149*151*157*163*167*173*179*181*191*193*197*199*211*223*227*229*233*239*241*251*257*263*269*271*277*281*283*293*307*311*313*317", 972, 3343, 331, true},
}};

constexpr std::array<ReferenceRow, 82> kPrinted{{
    {9, "2^5*3^2*5*7", 20, 92, 11, false},
    {10, "2^5*3^2*5*7*11", 25, 116, 13, false},
    {11, "2^5*3^2*5*7*11*13", 32, 142, 17, false},
    {12, "2^5*3^3*5*7*11*13", 35, 153, 17, false},
    {13, "2^5*3^3*5^2*7*11*13", 39, 169, 17, false},
    {14, "2^5*3^3*5^2*7*11*13*17", 46, 197, 19, true},
    {15, "2^5*3^3*5^2*7*11*13*17*19", 55, 227, 23, false},
    {16, "2^5*3^3*5^2*7*11*13*17*19*23", 62, 258, 29, false},
    {17, "2^6*3^3*5^2*7*11*13*17*19*23", 63, 265, 29, false},
    {18, "2^6*3^3*5^2*7*11*13*17*19*23*29", 74, 299, 31, false},
    {19, "2^6*3^3*5^2*7*11*13*17*19*23*29*31", 85, 333, 37, false},
    {20, "2^6*3^3*5^2*7^2*11*13*17*19*23*29*31", 91, 352, 37, false},
    {21, "2^6*3^4*5^2*7^2*11*13*17*19*23*29*31", 94, 363, 37, false},
    {22, "2^6*3^4*5^2*7^2*11*13*17*19*23*29*31*37", 106, 400, 41, false},
    {23, "2^6*3^4*5^2*7^2*11*13*17*19*23*29*31*37*41", 116, 437, 43, true},
    {24, "2^6*3^4*5^2*7^2*11*13*17*19*23*29*31*37*41*43", 127, 474, 47, true},
    {25, "2^6*3^4*5^2*7^2*11*13*17*19*23*29*31*37*41*43*47", 137, 512, 53, false},
    {26, "2^7*3^4*5^2*7^2*11*13*17*19*23*29*31*37*41*43*47", 138, 520, 53, false},
    {27, "2^7*3^4*5^2*7^2*11*13*17*19*23*29*31*37*41*43*47*53", 149, 559, 59, false},
    {28, "2^7*3^4*5^2*7^2*11*13*17*19*23*29*31*37*41*43*47*53*59", 162, 600, 61, false},
    {29, "2^7*3^4*5^2*7^2*11*13*17*19*23*29*31*37*41*43*47*53*59*61", 176, 641, 67, false},
    {30, "2^7*3^4*5^3*7^2*11*13*17*19*23*29*31*37*41*43*47*53*59*61", 181, 657, 67, false},
    {31, "2^7*3^4*5^3*7^2*11*13*17*19*23*29*31*37*41*43*47*53*59*61*67", 196, 699, 71, false},
    {32, "2^7*3^4*5^3*7^2*11*13*17*19*23*29*31*37*41*43*47*53*59*61*67*71", 212, 742, 73, true},
    {33, "2^7*3^4*5^3*7^2*11*13*17*19*23*29*31*37*41*43*47*53*59*61*67*71*73", 224, 785, 79, false},
    {34, "2^7*3^4*5^3*7^2*11^2*13*17*19*23*29*31*37*41*43*47*53*59*61*67*71*73", 231, 809, 79, true},
    {35, "2^7*3^4*5^3*7^2*11^2*13*17*19*23*29*31*37*41*43*47*53*59*61*67*71*73*79", 246, 853, 83, true},
    {36, "2^7*3^4*5^3*7^2*11^2*13*17*19*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83", 259, 897, 89, true},
    {37, "2^7*3^4*5^3*7^2*11^2*13*17*19*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89", 272, 942, 97, false},
    {38, "2^8*3^4*5^3*7^2*11^2*13*17*19*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89", 273, 949, 97, false},
    {39, "2^8*3^5*5^3*7^2*11^2*13*17*19*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89", 276, 960, 97, false},
    {40, "2^8*3^5*5^3*7^2*11^2*13*17*19*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97", 288, 1005, 101, false},
    {41, "2^8*3^5*5^3*7^2*11^2*13*17*19*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101", 299, 1052, 103, true},
    {42, "2^8*3^5*5^3*7^2*11^2*13*17*19*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103", 311, 1098, 107, true},
    {43, "2^7*3^4*5^2*7^2*11^2*13^2*17*19*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103", 317, 1124, 107, true},
    {44, "2^7*3^5*5^3*7^2*11^2*13^2*17*19*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109", 341, 1210, 113, true},
    {45, "2^7*3^5*5^3*7^2*11^2*13^2*17*19*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113", 354, 1258, 127, false},
    {46, "2^8*3^5*5^3*7^2*11^2*13^2*17*19*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113", 356, 1264, 127, false},
    {47, "2^8*3^5*5^3*7^2*11^2*13^2*17*19*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127", 368, 1313, 131, true},
    {48, "2^8*3^5*5^3*7^2*11^2*13^2*17*19*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131", 380, 1362, 137, false},
    {49, "2^8*3^5*5^3*7^2*11^2*13^2*17*19*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131*137", 394, 1411, 139, true},
    {50, "2^8*3^5*5^3*7^2*11^2*13^2*17*19*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131*137*139", 408, 1460, 149, false},
    {51, "2^9*3^5*5^3*7^2*11^2*13^2*17*19*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131*137*139", 409, 1467, 149, false},
    {52, "2^8*3^5*5^3*7^2*11^2*13^2*17*19*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131*137*139*149*151", 438, 1560, 157, false},
    {53, "2^9*3^5*5^3*7^2*11^2*13^2*17*19*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131*137*139*149*151", 440, 1567, 157, false},
    {54, "2^8*3^5*5^3*7^3*11^2*13^2*17*19*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131*137*139*149*151*157", 458, 1630, 163, true},
    {55, "2^9*3^5*5^3*7^3*11^2*13^2*17*19*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131*137*139*149*151*157", 459, 1637, 163, true},
    {56, "2^9*3^5*5^3*7^3*11^2*13^2*17*19*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131*137*139*149*151*157*163", 476, 1689, 167, true},
    {57, "2^9*3^5*5^3*7^3*11^2*13^2*17*19*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131*137*139*149*151*157*163*167", 493, 1739, 173, true},
    {58, "2^8*3^5*5^3*7^3*11^2*13^2*17^2*19*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131*137*139*149*151*157*163*167*173", 518, 1812, 179, true},
    {59, "2^9*3^5*5^3*7^3*11^2*13^2*17^2*19*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131*137*139*149*151*157*163*167*173", 519, 1819, 179, true},
    {60, "2^8*3^5*5^3*7^3*11^2*13^2*17^2*19*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131*137*139*149*151*157*163*167*173*179*181", 554, 1916, 191, true},
    {61, "2^9*3^5*5^3*7^3*11^2*13^2*17^2*19*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131*137*139*149*151*157*163*167*173*179*181", 555, 1923, 191, true},
    {62, "2^9*3^5*5^3*7^3*11^2*13^2*17^2*19*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131*137*139*149*151*157*163*167*173*179*181*191", 575, 1978, 193, true},
    {63, "2^9*3^5*5^3*7^3*11^2*13^2*17^2*19*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131*137*139*149*151*157*163*167*173*179*181*191*193", 596, 2028, 197, true},
    {64, "2^9*3^5*5^3*7^3*11^2*13^2*17^2*19*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131*137*139*149*151*157*163*167*173*179*181*191*193*197", 613, 2081, 199, true},
    {65, "2^9*3^5*5^3*7^3*11^2*13^2*17^2*19*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131*137*139*149*151*157*163*167*173*179*181*191*193*197*199", 628, 2134, 211, true},
    {66, "2^9*3^5*5^3*7^3*11^2*13^2*17^2*19*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131*137*139*149*151*157*163*167*173*179*181*191*193*197*199*211", 643, 2188, 223, false},
    {67, "2^9*3^5*5^3*7^3*11^2*13^2*17^2*19^2*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131*137*139*149*151*157*163*167*173*179*181*191*193*197*199*211", 653, 2217, 223, false},
    {68, "2^9*3^5*5^3*7^3*11^2*13^2*17^2*19^2*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131*137*139*149*151*157*163*167*173*179*181*191*193*197*199*211*223", 670, 2271, 227, true},
    {69, "2^9*3^5*5^3*7^3*11^2*13^2*17^2*19^2*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131*137*139*149*151*157*163*167*173*179*181*191*193*197*199*211*223*227", 685, 2325, 229, true},
    {70, "2^9*3^5*5^3*7^3*11^2*13^2*17^2*19^2*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131*137*139*149*151*157*163*167*173*179*181*191*193*197*199*211*223*227*229", 701, 2380, 233, true},
    {71, "2^9*3^5*5^3*7^3*11^2*13^2*17^2*19^2*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131*137*139*149*151*157*163*167*173*179*181*191*193*197*199*211*223*227*229*233", 717, 2434, 239, true},
    {72, "2^9*3^5*5^3*7^3*11^2*13^2*17^2*19^2*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131*137*139*149*151*157*163*167*173*179*181*191*193*197*199*211*223*227*229*233*239", 733, 2489, 241, true},
    {73, "2^9*3^5*5^3*7^3*11^2*13^2*17^2*19^2*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131*137*139*149*151*157*163*167*173*179*181*191*193*197*199*211*223*227*229*233*239*241", 748, 2544, 251, true},
    {74, "2^9*3^5*5^4*7^3*11^2*13^2*17^2*19^2*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131*137*139*149*151*157*163*167*173*179*181*191*193*197*199*211*223*227*229*233*239*241", 752, 2560, 251, true},
    {75, "2^9*3^6*5^4*7^3*11^2*13^2*17^2*19^2*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131*137*139*149*151*157*163*167*173*179*181*191*193*197*199*211*223*227*229*233*239*241", 755, 2571, 251, true},
    {76, "2^9*3^6*5^4*7^3*11^2*13^2*17^2*19^2*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131*137*139*149*151*157*163*167*173*179*181*191*193*197*199*211*223*227*229*233*239*241*251", 774, 2626, 257, true},
    {77, "2^9*3^6*5^4*7^3*11^2*13^2*17^2*19^2*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131*137*139*149*151*157*163*167*173*179*181*191*193*197*199*211*223*227*229*233*239*241*251*257", 791, 2682, 263, true},
    {78, "2^9*3^6*5^4*7^3*11^2*13^2*17^2*19^2*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131*137*139*149*151*157*163*167*173*179*181*191*193*197*199*211*223*227*229*233*239*241*251*257*263", 808, 2737, 269, true},
    {79, "2^9*3^6*5^4*7^3*11^2*13^2*17^2*19^2*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131*137*139*149*151*157*163*167*173*179*181*191*193*197*199*211*223*227*229*233*239*241*251*257*263*269", 825, 2793, 271, true},
    {80, "2^9*3^6*5^4*7^3*11^2*13^2*17^2*19^2*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131*137*139*149*151*157*163*167*173*179*181*191*193*197*199*211*223*227*229*233*239*241*251*257*263*269*271", 842, 2849, 277, true},
    {81, "2^9*3^6*5^4*7^3*11^2*13^2*17^2*19^2*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131*137*139*149*151*157*163*167*173*179*181*191*193*197*199*211*223*227*229*233*239*241*251*257*263*269*271*277", 859, 2906, 281, true},
    {82, "2^9*3^6*5^4*7^3*11^2*13^2*17^2*19^2*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131*137*139*149*151*157*163*167*173*179*181*191*193*197*199*211*223*227*229*233*239*241*251*257*263*269*271*277*281", 874, 2962, 283, true},
    {83, "2^9*3^6*5^4*7^3*11^2*13^2*17^2*19^2*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131*137*139*149*151*157*163*167*173*179*181*191*193*197*199*211*223*227*229*233*239*241*251*257*263*269*271*277*281*283", 889, 3018, 293, true},
    {84, "2^9*3^6*5^4*7^3*11^2*13^2*17^2*19^2*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131*137*139*149*151*157*163*167*173*179*181*191*193*197*199*211*223*227*229*233*239*241*251*257*263*269*271*277*281*283*293", 903, 3075, 307, true},
    {85, "2^10*3^6*5^4*7^3*11^2*13^2*17^2*19^2*23*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131*137*139*149*151*157*163*167*173*179*181*191*193*197*199*211*223*227*229*233*239*241*251*257*263*269*271*277*281*283*293", 904, 3082, 307, true},
    {86, "2^10*3^6*5^4*7^3*11^2*13^2*17^2*19^2*23^2*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131*137*139*149*151*157*163*167*173*179*181*191*193*197*199*211*223*227*229*233*239*241*251*257*263*269*271*277*281*283*293", 912, 3114, 307, true},
    {87, "2^10*3^6*5^4*7^3*11^2*13^2*17^2*19^2*23^2*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131*137*139*149*151*157*163*167*173*179*181*191*193*197*199*211*223*227*229*233*239*241*251*257*263*269*271*277*281*283*293*307", 927, 3171, 311, true},
    {88, "2^10*3^6*5^4*7^3*11^2*13^2*17^2*19^2*23^2*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131*137*139*149*151*157*163*167*173*179*181*191*193*197*199*211*223*227*229*233*239*241*251*257*263*269*271*277*281*283*293*307*311", 942, 3228, 313, true},
    {89, "2^9*3^6*5^4*7^3*11^2*13^2*17^2*19^2*23^2*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131*137*139*149*151*157*163*167*173*179*181*191*193*197*199*211*223*227*229*233*239*241*251*257*263*269*271*277*281*283*293*307*311*313*317", 971, 3336, 331, true},
    {90, "2^10*3^6*5^4*7^3*11^2*13^2*17^2*19^2*23^2*29*31*37*41*43*47*53*59*61*67*71*73*79*83*89*97*101*103*107*109*113*127*131*137*139*149*151*157*163*167*173*179*181*191*193*197*199*211*223*227*229*233*239*241*251*257*263*269*271*277*281*283*293*307*311*313*317", 972, 3343, 331, true},
}};

}  // namespace

std::span<const ReferenceRow> rows(Edition edition) {
  return edition == Edition::Corrected
             ? std::span<const ReferenceRow>(kCorrected)
             : std::span<const ReferenceRow>(kPrinted);
}

const ReferenceRow* find_row(std::uint64_t omega, Edition edition) {
  if (omega < 9 || omega > 90) return nullptr;
  return &rows(edition)[omega - 9];
}

std::vector<Mismatch> compare(const std::vector<OmegaRow>& computed,
                              Edition edition) {
  std::vector<Mismatch> out;
  for (const OmegaRow& row : computed) {
    const ReferenceRow* ref = find_row(row.omega, edition);
    if (ref == nullptr)
      throw DomainError("the reference table covers omega 9..90 only");
    std::string actual_fact = row.n_star.format(FormatStyle::Exact);
    if (actual_fact != ref->factorization)
      out.push_back(Mismatch{row.omega, "factorization", ref->factorization,
                             actual_fact});
    if (row.sa_index != ref->sa_index)
      out.push_back(Mismatch{row.omega, "sa_index",
                             std::to_string(ref->sa_index),
                             std::to_string(row.sa_index)});
    double mid = row.log_n_star.midpoint_double();
    int tenths = half_up_tenths(mid);
    bool log_ok = tenths == ref->log_tenths &&
                  std::abs(mid - ref->log_tenths / 10.0) <= 0.0499;
    if (!log_ok)
      out.push_back(Mismatch{row.omega, "log", one_decimal(ref->log_tenths),
                             row.log_n_star.midpoint_decimal(4)});
    if (row.p_omega != ref->p_omega)
      out.push_back(Mismatch{row.omega, "p_omega",
                             std::to_string(ref->p_omega),
                             std::to_string(row.p_omega)});
    if (row.ineq4 != ref->tick)
      out.push_back(Mismatch{row.omega, "tick", ref->tick ? "yes" : "no",
                             row.ineq4 ? "yes" : "no"});
  }
  return out;
}

}  // namespace gw::reference

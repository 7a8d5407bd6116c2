#pragma once

// Generated by tests/oracle/derive.py. Do not edit.

#include <string>
#include <vector>

namespace oracle {

// Exact integrals over [0,1].
inline const long kIntegralQuadraticNum = -1;
inline const long kIntegralQuadraticDen = 6;
inline const long kIntegralCubicNum = 1;
inline const long kIntegralCubicDen = 4;

// Closed-form maps, ascending coefficients.
inline const std::vector<std::string> kSymmetricQuartic = {"0.0", "4.000000000000000000000000000000000000000", "-1.200000000000000000000000000000000000000e+1", "1.600000000000000000000000000000000000000e+1", "-8.000000000000000000000000000000000000000"};
inline const std::vector<std::string> kFlatQuartic = {"0.0", "9.481481481481481481481481481481481481481", "-2.844444444444444444444444444444444444444e+1", "2.844444444444444444444444444444444444444e+1", "-9.481481481481481481481481481481481481481"};
// Critical points of 6x - 15x^2 + 10x^3.
inline const std::vector<std::string> kExactCubicCritical = {"2.763932022500210303590826331268723764559e-1", "7.236067977499789696409173668731276235441e-1"};

struct PhiCase {
    std::vector<std::string> gaps;
    std::vector<int> multiplicities;
    std::vector<std::string> values;
};

// Gap integrals by adaptive quadrature of the factored product.
inline const std::vector<PhiCase> kPhiCases = {
    {{"1.000000000000000000000000000000000000000"}, {1, 1}, {"1.666666666666666666666666666666666666667e-1"}},
    {{"1.000000000000000000000000000000000000000", "1.000000000000000000000000000000000000000"}, {1, 1, 1}, {"2.500000000000000000000000000000000000000e-1", "2.500000000000000000000000000000000000000e-1"}},
    {{"5.000000000000000000000000000000000000000e-1", "1.250000000000000000000000000000000000000", "7.500000000000000000000000000000000000000e-1"}, {1, 1, 1, 1}, {"7.057291666666666666666666666666666666667e-2", "4.781087239583333333333333333333333333333e-1", "2.447753906250000000000000000000000000000e-1"}},
    {{"3.000000000000000000000000000000000000000e-1", "9.000000000000000000000000000000000000000e-1"}, {2, 1, 3}, {"7.237928571428571428571428571428571428571e-4", "1.138802142857142857142857142857142857143e-2"}},
    {{"1.100000000000000000000000000000000000000", "4.000000000000000000000000000000000000000e-1", "8.000000000000000000000000000000000000000e-1"}, {1, 3, 1, 2}, {"3.563004129404761904761904761904761904762e-1", "6.081584761904761904761904761904761904762e-4", "2.819296304761904761904761904761904761905e-2"}},
};

struct FixedPoint {
    std::string combinatorics;
    std::vector<std::string> coefficients;
    std::vector<std::string> marked_points;
};

// Solutions of the fixed-point polynomial system.
inline const std::vector<FixedPoint> kFixedPoints = {
    {"0,3,2,1,4",
     {"0.0", "6.000000000000000000000000000000000000000", "-1.500000000000000000000000000000000000000e+1", "1.000000000000000000000000000000000000000e+1"},
     {"0.0", "2.763932022500210303590826331268723764559e-1", "5.000000000000000000000000000000000000000e-1", "7.236067977499789696409173668731276235441e-1", "1.000000000000000000000000000000000000000"}},
    {"0,4,3,1,2,5",
     {"0.0", "7.121692958580435554689685163981723854675", "-1.764597658959140271870472143821435576635e+1", "1.152428363101096716401503627423263191168e+1"},
     {"0.0", "2.769109264662945472539371904678172156916e-1", "4.125769833384190531680983375773840407170e-1", "7.438886971567262830032026911649717803988e-1", "8.636872279893779003438404087954105020724e-1", "1.000000000000000000000000000000000000000"}},
    {"0,2,6^2,4,3^3,1^2,4,7",
     {"0.0", "1.816306902040478155698260474375675775951e+1", "-1.137216731014542726540310846620001679637e+2", "2.762222107232506254014908696165205756943e+2", "-2.960914919932622367905040215182084615164e+2", "1.164278853510611024860616318199312960264e+2"},
     {"0.0", "7.654660449410031867017960231865500384046e-3", "1.324916146229523417098990114602795483809e-1", "3.110621634664958913016412662816949836758e-1", "5.269191567651089705698849497940246950339e-1", "8.481757478743035804095332265303751035436e-1", "9.661224528756441008419035621473560968345e-1", "1.000000000000000000000000000000000000000"}},
    {"0,3^4,2^3,1,4",
     {"0.0", "2.020557074573170421088755758966791205523e+1", "-1.817478871772869754356043656199596570693e+2", "8.551404749246331074559401937479134280636e+2", "-2.244547436278278608662566058819724506144e+3", "3.255216137061833580924111713244019314243e+3", "-2.427230115685899751666334033419639961816e+3", "7.239632564092669431735649932777234706679e+2"},
     {"0.0", "2.167975432687659159895941176497887422978e-1", "6.533470796907441579341361789463960893559e-1", "9.166542990285371089180046541785682604813e-1", "1.000000000000000000000000000000000000000"}},
    {"6,2^4,3,4,5,1,0",
     {"1.000000000000000000000000000000000000000", "-5.753372620691056688432079418025355534465", "3.124430445190876283656507348170441744321e+1", "-8.199098244156488493418037485069283895907e+1", "1.021693409218464529622798382250848417632e+2", "-4.666929031149927417623245743807106471291e+1"},
     {"0.0", "3.112648720266878719941982626311311161027e-1", "5.863838904575597112147196947685843695197e-1", "6.820428241538768617916862500501206350619e-1", "8.175813356844655762434862253903656506227e-1", "9.746070611546436361592926815678370368873e-1", "1.000000000000000000000000000000000000000"}},
    {"0,2,1,3,5,3^3,0",
     {"0.0", "7.494214522406226887399323056113604247828", "-9.701797994032138087770319927657596055875e+1", "4.579211574468177755577256416367775565203e+2", "-9.130123135405836208104545612420888406069e+2", "8.116279093629733468401930872290418089208e+2", "-2.670129878512923475971602914032681685232e+2"},
     {"0.0", "6.093223348540926243688728562069908251505e-2", "1.881130490148388732082131546857788119641e-1", "3.154192602778293898964959101424080723310e-1", "5.315498243140645671279867331791272956565e-1", "8.762262149282151755032453864584756434351e-1", "1.000000000000000000000000000000000000000"}},
    {"0,3,2,1,2,0",
     {"0.0", "7.459778851416010189592366167326143745496", "-3.207337580175137712607482744522476106664e+1", "4.709040115568717660678132824538033000539e+1", "-2.247680420535180967029886696748171268425e+1"},
     {"0.0", "1.784759175878766651178567086946220656466e-1", "3.553803587859930814584115991525806183191e-1", "5.546445897674454089528424987191078589406e-1", "8.381794223008736361990035718372793532560e-1", "1.000000000000000000000000000000000000000"}},
    {"0,4,0,1,0,6,0",
     {"0.0", "2.015184092075376050025708070459553929761e+1", "-2.089317664678414311243936624992268999862e+2", "8.275262977617780261614927361107856072217e+2", "-1.559747539298921695837292438169453847793e+3", "1.400650081957501178785943560469945399975e+3", "-4.796489148732698384860072766166457987150e+2"},
     {"0.0", "7.764196707210828285981779773722663312781e-2", "3.204612177684587565948940131195406449267e-1", "4.810078586386955214288734174683404420011e-1", "6.396172255733479612224037056951137540496e-1", "9.147358031837340075895072640042025241887e-1", "1.000000000000000000000000000000000000000"}},
};

}  // namespace oracle

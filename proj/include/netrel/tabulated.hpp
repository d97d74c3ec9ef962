#pragma once

#include <string_view>

#include "netrel/mpoly.hpp"

namespace netrel::tabulated {

namespace text {

/// First elimination factor (critical point A); variables p, rho.
inline constexpr std::string_view p1 =
    "rho - p*(1 + 9*rho + 3*rho^2) + p^2*rho*(41 + 37*rho - 11*rho^2) + p^3*rho*(-39 - 195*rho +"
    " 99*rho^2 - 4*rho^3) + p^4*rho*(16 + 147*rho - 411*rho^2 + 43*rho^3 + 11*rho^4) - p^5*rho^2*(-54 -"
    " 2300*rho + 123*rho^2 + 67*rho^3 + 7*rho^4) - p^6*rho^2*(126 + 4700*rho + 1865*rho^2 + 559*rho^3 -"
    " 59*rho^4 + 13*rho^5) + p^7*rho^2*(41 + 4859*rho + 2324*rho^2 + 6400*rho^3 + 1135*rho^4 + 189*rho^5"
    " + 14*rho^6) + p^8*rho^3*(-2701 + 4149*rho - 11762*rho^2 - 8744*rho^3 - 2515*rho^4 - 311*rho^5 +"
    " 4*rho^6) - p^9*rho^3*(-781 + 12546*rho - 6054*rho^2 - 14564*rho^3 - 11548*rho^4 - 3012*rho^5 -"
    " 124*rho^6 + 8*rho^7) - p^10*rho^3*(96 - 13197*rho - 3996*rho^2 + 4727*rho^3 + 17901*rho^4 +"
    " 11943*rho^5 + 1464*rho^6 + 4*rho^7) + p^11*rho^4*(-7185 - 3814*rho - 10626*rho^2 + 5695*rho^3 +"
    " 21337*rho^4 + 5871*rho^5 + 304*rho^6) - p^12*rho^4*(-2040 + 3598*rho - 10478*rho^2 - 17573*rho^3 +"
    " 19235*rho^4 + 11669*rho^5 + 1219*rho^6) + p^13*rho^4*(-240 + 6353*rho + 3091*rho^2 - 30176*rho^3 +"
    " 6625*rho^4 + 14726*rho^5 + 2128*rho^6) - p^14*rho^5*(3613 + 12361*rho - 25852*rho^2 - 5221*rho^3 +"
    " 14188*rho^4 + 2147*rho^5) + p^15*rho^5*(947 + 11148*rho - 14935*rho^2 - 8341*rho^3 + 9720*rho^4 +"
    " 2095*rho^5) - p^16*rho^5*(96 + 5829*rho - 7507*rho^2 - 1909*rho^3 + 690*rho^4 + 3066*rho^5) +"
    " 2*p^17*rho^6*(993 - 2513*rho + 3568*rho^2 - 4056*rho^3 + 2046*rho^4) - p^18*rho^6*(418 - 3991*rho"
    " + 10333*rho^2 - 10532*rho^3 + 3785*rho^4) + p^19*rho^6*(41 - 2397*rho + 7184*rho^2 - 7257*rho^3 +"
    " 2430*rho^4) + 3*p^20*(1 - rho)*rho^7*(299 - 684*rho + 367*rho^2) - p^21*(1 - rho)*rho^7*(185 -"
    " 519*rho + 322*rho^2) + p^22*(1 - rho)*rho^7*(1 - 2*rho)*(16 - 15*rho) - 19*p^23*(1 - rho)^2*rho^8"
    " + 8*p^24*(1 - rho)^2*rho^8 - p^25*(1 - rho)^2*rho^8";

/// Second elimination factor (critical point B); variables p, rho.
inline constexpr std::string_view p2 =
    "9 + 2*p*(-93 + 37*rho) + p^2*(1375 - 1139*rho + 235*rho^2) + p^3*(-4548 + 6619*rho - 2306*rho^2 +"
    " 380*rho^3) + p^4*(7551 - 22762*rho + 7011*rho^2 - 2415*rho^3 + 335*rho^4) + p^5*(-6210 + 53479*rho"
    " + 2160*rho^2 + 7102*rho^3 - 1462*rho^4 + 154*rho^5) + p^6*(2025 - 85209*rho - 79460*rho^2 -"
    " 18121*rho^3 - 11141*rho^4 + 223*rho^5 + 29*rho^6) + p^7*rho*(84879 + 277027*rho + 106511*rho^2 +"
    " 202610*rho^3 - 36581*rho^4 + 1170*rho^5) + p^8*rho*(-46170 - 521894*rho - 587852*rho^2 -"
    " 1536749*rho^3 + 263741*rho^4 - 39391*rho^5 + 547*rho^6) - p^9*rho*(-10125 - 611502*rho -"
    " 1935829*rho^2 - 7279427*rho^3 + 440373*rho^4 - 331984*rho^5 + 16780*rho^6) + p^10*rho^2*(-455796 -"
    " 3964687*rho - 23412205*rho^2 - 3663927*rho^3 - 1452867*rho^4 + 375501*rho^5 + 2506*rho^6) +"
    " p^11*rho^2*(204255 + 5324974*rho + 53128592*rho^2 + 28420289*rho^3 + 5054943*rho^4 - 4185113*rho^5"
    " + 12850*rho^6) + p^12*rho^2*(-42525 - 4776213*rho - 87000246*rho^2 - 104194583*rho^3 -"
    " 21210055*rho^4 + 27622695*rho^5 - 279589*rho^6 + 23497*rho^7) + p^13*rho^3*(2798298 +"
    " 103839446*rho + 248730949*rho^2 + 91081790*rho^3 - 119321953*rho^4 - 214483*rho^5 + 2402*rho^6) +"
    " p^14*rho^3*(-987660 - 90012828*rho - 421343630*rho^2 - 300983008*rho^3 + 354546288*rho^4 +"
    " 19055623*rho^5 - 2902607*rho^6 + 156356*rho^7) - p^15*rho^3*(-164025 - 55522953*rho -"
    " 523811627*rho^2 - 718737692*rho^3 + 737559653*rho^4 + 137144016*rho^5 - 24588235*rho^6 +"
    " 1508228*rho^7) + p^16*rho^4*(-23264478 - 483102731*rho - 1256125498*rho^2 + 1050744677*rho^3 +"
    " 534128347*rho^4 - 99647028*rho^5 + 3934654*rho^6 + 455372*rho^7) - p^17*rho^4*(-5993055 -"
    " 328891636*rho - 1637004249*rho^2 + 897069980*rho^3 + 1365985483*rho^4 - 226306853*rho^5 -"
    " 13885678*rho^6 + 5675792*rho^7) + p^18*rho^4*(-729000 - 161715291*rho - 1608420692*rho^2 +"
    " 82688597*rho^3 + 2449767599*rho^4 - 232309325*rho^5 - 139531559*rho^6 + 32366472*rho^7 +"
    " 274104*rho^8) - p^19*rho^5*(-54779328 - 1192868328*rho - 1036350248*rho^2 + 3126514952*rho^3 +"
    " 252124085*rho^4 - 530576442*rho^5 + 110376920*rho^6 + 3523400*rho^7) + p^20*rho^5*(-11563290 -"
    " 661113157*rho - 1778966082*rho^2 + 2728489572*rho^3 + 1464568704*rho^4 - 1261931324*rho^5 +"
    " 243789711*rho^6 + 21533484*rho^7) - p^21*rho^5*(-1166400 - 267060831*rho - 1769360761*rho^2 +"
    " 1310882671*rho^3 + 3038379428*rho^4 - 2084661610*rho^5 + 338855326*rho^6 + 82890944*rho^7) +"
    " p^22*rho^6*(-74824812 - 1221905422*rho - 276377214*rho^2 + 4066473373*rho^3 - 2443698651*rho^4 +"
    " 202709670*rho^5 + 224730742*rho^6) - p^23*rho^6*(-13126860 - 609332834*rho - 1166508009*rho^2 +"
    " 3871377708*rho^3 - 1932786432*rho^4 - 295096153*rho^5 + 454945390*rho^6) + p^24*rho^6*(-1103625 -"
    " 218082828*rho - 1184923715*rho^2 + 2650067734*rho^3 - 752045795*rho^4 - 1022894704*rho^5 +"
    " 711726527*rho^6) - p^25*rho^7*(-53743284 - 754572613*rho + 1226487190*rho^2 + 416790514*rho^3 -"
    " 1614449937*rho^4 + 878716880*rho^5) + p^26*rho^7*(-8258625 - 336506619*rho + 274671788*rho^2 +"
    " 1010093115*rho^3 - 1758220080*rho^4 + 866894232*rho^5) - p^27*rho^7*(-605475 - 106456428*rho -"
    " 91817943*rho^2 + 978393477*rho^3 - 1446294368*rho^4 + 687560517*rho^5) + p^28*rho^8*(-23082921 -"
    " 120749456*rho + 640575958*rho^2 - 928058750*rho^3 + 438708098*rho^4) - p^29*rho^8*(-3116070 -"
    " 61389864*rho + 311935039*rho^2 - 469461042*rho^3 + 224128938*rho^4) + p^30*rho^8*(-200475 -"
    " 19494900*rho + 116248678*rho^2 - 186770845*rho^3 + 90668832*rho^4) - p^31*rho^9*(-4042170 +"
    " 33260499*rho - 57626524*rho^2 + 28477028*rho^3) + p^32*rho^9*(-510300 + 7194033*rho -"
    " 13394778*rho^2 + 6717655*rho^3) - 3*p^33*rho^9*(-10125 + 376209*rho - 740598*rho^2 + 374614*rho^3)"
    " + 540*p^34*(1 - rho)*rho^10*(216 - 221*rho) - 6075*p^35*(1 - rho)^2*rho^10";

/// Equal-modulus compatibility condition; variables p, rho, T.
inline constexpr std::string_view p3 =
    "2 + 2*T + p*(-6 - 10*T - 4*T^2) + p*rho*(5 + 12*T - 8*T^3 + p*(-29 - 52*T + 24*T^2 + 64*T^3 +"
    " 16*T^4) + p^2*(78 + 138*T - 52*T^2 - 176*T^3 - 64*T^4) + p^3*(-36 - 60*T + 48*T^2 + 120*T^3 +"
    " 48*T^4)) + p^2*rho^2*(4*T + 8*T^2 - 8*T^3 - 16*T^4 + p*(-8 + 8*T - 24*T^2 + 48*T^4) + p^2*(56 -"
    " 22*T + 44*T^2 + 192*T^3 + 128*T^4 + 64*T^5) + p^3*(-262 - 336*T + 40*T^3 - 256*T^4 - 288*T^5 -"
    " 64*T^6) + p^4*(248 + 384*T - 120*T^2 - 384*T^3 + 128*T^4 + 384*T^5 + 128*T^6) + p^5*(-66 - 110*T +"
    " 52*T^2 + 160*T^3 - 32*T^4 - 160*T^5 - 64*T^6)) + p^3*rho^3*(-10 - 40*T - 40*T^2 + 8*T^3 + 16*T^4 +"
    " p*(58 + 164*T + 264*T^2 + 24*T^3 - 256*T^4 - 128*T^5) + p^2*(-206 - 378*T - 800*T^2 - 656*T^3 +"
    " 416*T^4 + 640*T^5 + 192*T^6) + p^3*(448 + 890*T + 1296*T^2 + 1080*T^3 - 256*T^4 - 864*T^5 -"
    " 384*T^6) + p^4*(-237 - 668*T - 1188*T^2 - 920*T^3 - 32*T^4 + 320*T^5 + 192*T^6) + p^5*(-151 - 70*T"
    " + 760*T^2 + 904*T^3 + 256*T^4 + 32*T^5) + p^6*(162 + 230*T - 300*T^2 - 560*T^3 - 192*T^4) +"
    " p^7*(-36 - 60*T + 48*T^2 + 120*T^3 + 48*T^4)) + p^4*rho^4*(-10 - 54*T - 104*T^2 - 56*T^3 + 80*T^4"
    " + 64*T^5 + p*(54 + 274*T + 492*T^2 + 400*T^3 - 144*T^4 - 416*T^5 - 192*T^6) + p^2*(-12 - 578*T -"
    " 1244*T^2 - 904*T^3 + 48*T^4 + 576*T^5 + 384*T^6) + p^3*(-206 + 456*T + 2000*T^2 + 1688*T^3 +"
    " 304*T^4 - 160*T^5 - 192*T^6) + p^4*(156 - 356*T - 2060*T^2 - 2120*T^3 - 592*T^4 - 64*T^5) +"
    " p^5*(92 + 462*T + 1228*T^2 + 1272*T^3 + 400*T^4) + p^6*(-88 - 270*T - 372*T^2 - 288*T^3 - 96*T^4)"
    " + p^7*(-22 - 2*T + 28*T^2 + 8*T^3) + p^8*(30 + 46*T + 16*T^2) + p^9*(-6 - 10*T - 4*T^2)) +"
    " p^5*rho^5*(-3 - 20*T - 56*T^2 - 64*T^3 - 16*T^4 + 64*T^5 + 64*T^6 + p*(11 + 160*T + 432*T^2 +"
    " 376*T^3 + 80*T^4 - 96*T^5 - 128*T^6) + p^2*(-84 - 488*T - 1116*T^2 - 984*T^3 - 240*T^4 + 64*T^6) +"
    " p^3*(240 + 850*T + 1416*T^2 + 1224*T^3 + 336*T^4 + 32*T^5) + p^4*(-252 - 790*T - 960*T^2 - 712*T^3"
    " - 208*T^4) + p^5*(74 + 318*T + 328*T^2 + 168*T^3 + 48*T^4) + p^6*(43 + 14*T - 28*T^2 - 8*T^3) +"
    " p^7*(-33 - 48*T - 16*T^2) + p^8*(6 + 10*T + 4*T^2))";

/// Printed specialization at T = 1 (degeneracy boundary).
inline constexpr std::string_view p3_t1 =
    "4 - 20*p + p*rho*(9 + 23*p - 76*p^2 + 120*p^3) - 2*p^2*rho^2*(6 - 12*p - 231*p^2 + 583*p^3 -"
    " 384*p^4 + 110*p^5) + p^3*rho^3*(-66 + 126*p - 792*p^2 + 2210*p^3 - 2533*p^4 + 1731*p^5 - 660*p^6 +"
    " 120*p^7) - 2*p^4*rho^4*(40 - 234*p + 865*p^2 - 1945*p^3 + 2518*p^4 - 1727*p^5 + 557*p^6 - 6*p^7 -"
    " 46*p^8 + 10*p^9) + p^5*rho^5*(-31 + 835*p - 2848*p^2 + 4098*p^3 - 2922*p^4 + 936*p^5 + 21*p^6 -"
    " 97*p^7 + 20*p^8)";

/// Printed specialization at rho = 1.
inline constexpr std::string_view p3_rho1 =
    "2 + 9*p - 4*p^2 - 30*p^3 + 38*p^4 - 10*p^5 - 6*p^6 + 3*p^7 + (2 + 12*p - 8*p^2 - 34*p^3 + 48*p^4 -"
    " 18*p^5 - 2*p^6 + 2*p^7)*T - 4*p*(1-p)^2*(1 - p + p^2)*T^2 - 8*p*(1-p)^2*T^3";

/// Printed factored specialization at T = -1.
inline constexpr std::string_view p3_tm1 =
    "(1 - p)*p*rho*(1 + p*(1-p)*rho)^2*(1 - rho + rho*(1-p)^3)^2";

/// Equations for the rho = 1 critical points.
inline constexpr std::string_view pA_rho1 = "1 - p - 11*p^2 + 15*p^3 - 3*p^4 - 2*p^5 - p^6 + p^7";
inline constexpr std::string_view TA_rho1 = "-1 + 11*T - 27*T^2 - 26*T^3 + 140*T^4 + 240*T^5 + 144*T^6 + 32*T^7";
inline constexpr std::string_view pB_rho1 =
    "1 - 4*p - 9*p^2 + 101*p^3 - 413*p^4 + 1019*p^5 - 1761*p^6 + 2151*p^7 - 1864*p^8 + 1097*p^9"
    " - 386*p^10 + 60*p^11";
inline constexpr std::string_view TB_rho1 =
    "3040707 + 12576464*T + 15322821*T^2 - 4376828*T^3 - 22559186*T^4 - 10112842*T^5"
    " + 9510320*T^6 + 7762048*T^7 - 1337920*T^8 - 2068608*T^9 + 8192*T^10 + 204800*T^11";
inline constexpr std::string_view pC_rho1 = "4 + 9*p + 16*p^2 - 88*p^3 + 98*p^4 - 32*p^5 - 8*p^6 + 5*p^7";

}  // namespace text

inline const MPoly& p1() {
  static const MPoly v = MPoly::parse(text::p1);
  return v;
}
inline const MPoly& p2() {
  static const MPoly v = MPoly::parse(text::p2);
  return v;
}
inline const MPoly& p3() {
  static const MPoly v = MPoly::parse(text::p3);
  return v;
}
inline const MPoly& p3_t1() {
  static const MPoly v = MPoly::parse(text::p3_t1);
  return v;
}
inline const MPoly& p3_rho1() {
  static const MPoly v = MPoly::parse(text::p3_rho1);
  return v;
}
inline const MPoly& p3_tm1() {
  static const MPoly v = MPoly::parse(text::p3_tm1);
  return v;
}
inline const MPoly& pA_rho1() {
  static const MPoly v = MPoly::parse(text::pA_rho1);
  return v;
}
inline const MPoly& TA_rho1() {
  static const MPoly v = MPoly::parse(text::TA_rho1);
  return v;
}
inline const MPoly& pB_rho1() {
  static const MPoly v = MPoly::parse(text::pB_rho1);
  return v;
}
inline const MPoly& TB_rho1() {
  static const MPoly v = MPoly::parse(text::TB_rho1);
  return v;
}
inline const MPoly& pC_rho1() {
  static const MPoly v = MPoly::parse(text::pC_rho1);
  return v;
}

}  // namespace netrel::tabulated

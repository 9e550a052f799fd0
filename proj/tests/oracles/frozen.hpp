// Generated by gen_frozen.py; do not edit by hand.
#pragma once

namespace frozen {

inline constexpr double kVolumeDensityCH2At1 = 2.5045245476792144;
inline constexpr double kVolumeDensityHH2At07 = 3.470922310819328;
inline constexpr double kPhiRH2At0_7 = 0.25516900563094302;
inline constexpr double kPsiRH2At0_7 = 0.12003460210212661;
inline constexpr double kPhiRH3At1_1 = 0.56427629263397338;
inline constexpr double kPsiRH3At1_1 = 0.47721538078509229;
inline constexpr double kPhiCH2At0_5 = 0.018433535994458011;
inline constexpr double kPsiCH2At0_5 = 0.0074569956636617623;
inline constexpr double kPhiHH2At0_7 = 0.020016946139571521;
inline constexpr double kPsiHH2At0_7 = 0.01270067520405107;
inline constexpr double kPhiOH2At0_5 = 3.5388845155367124e-6;
inline constexpr double kPsiOH2At0_5 = 1.6779583261755861e-6;
inline constexpr double kPhiOH2At1_0 = 9.2467127170809993;
inline constexpr double kPsiOH2At1_0 = 8.8877312040242757;
inline constexpr double kBallVolCH2At0_25 = 0.020094991996390009;
inline constexpr double kBallPerCH2At0_25 = 0.32819045799403621;
inline constexpr double kBallVolCH2At0_5 = 0.36386341595708378;
inline constexpr double kBallPerCH2At0_5 = 3.1495339243797554;
inline constexpr double kBallVolCH2At1 = 9.4127959741047256;
inline constexpr double kBallPerCH2At1 = 49.437332996822219;
inline constexpr double kBallVolHH2At0_7 = 0.64994417624408199;
inline constexpr double kBallPerOH2At0_5 = 0.0004951209735680066;
inline constexpr double kPhi2HH2At0_7 = 3.8290288257470194;
inline constexpr double kUnitBallVol2 = 3.1415926535897932;
inline constexpr double kUnitBallVol3 = 4.188790204786391;
inline constexpr double kUnitBallVol4 = 4.9348022005446793;
inline constexpr double kUnitBallVol8 = 4.0587121264167682;
inline constexpr double kUnitBallVol16 = 0.2353306303588932;
inline constexpr double kMomentX1sqX2sqS3 = 0.82246703342411322;
inline constexpr double kMomentX1sqS15 = 0.2353306303588932;
inline constexpr double kMomentX1p4S7 = 1.2176136379250305;
inline constexpr double kMomentX1sqX2sqX3sqS7 = 0.033822601053473068;
inline constexpr double kLambda1RH3At1 = 1.4481233219326209;
inline constexpr double kLambda1CH2At0_5 = 10.26163539752758;
inline constexpr double kLambda1OH2At0_5 = 49.735281521706047;

}  // namespace frozen

// Generated offline at 40-digit precision. Each row is a Taylor series in
// z = 2p - 1 for the Riemann-Siegel remainder term C_k(p), k = 0..=4.

pub(crate) const C0: [f64; 47] = [
    0.3826834323650898,
    0.0,
    0.43724046807752043,
    0.0,
    0.1323765754803435,
    0.0,
    -0.013605026047674188,
    0.0,
    -0.013567621970103581,
    0.0,
    -0.0016237253231444653,
    0.0,
    0.0002970535373337969,
    0.0,
    7.94330087952147e-05,
    0.0,
    4.6556124614504504e-07,
    0.0,
    -1.4327251630955106e-06,
    0.0,
    -1.0354847112312946e-07,
    0.0,
    1.2357927083861738e-08,
    0.0,
    1.7881083857954906e-09,
    0.0,
    -3.391414389927036e-11,
    0.0,
    -1.6326633902565907e-11,
    0.0,
    -3.7851093185412205e-13,
    0.0,
    9.327423259201725e-14,
    0.0,
    5.221843015978137e-15,
    0.0,
    -3.350673072744264e-16,
    0.0,
    -3.4124265228117265e-17,
    0.0,
    5.751203341432399e-19,
    0.0,
    1.4895301363211506e-19,
    0.0,
    1.2565372717021416e-21,
    0.0,
    -4.721295250143426e-22,
];

pub(crate) const C1: [f64; 48] = [
    0.0,
    -0.026825102628375348,
    0.0,
    0.013784773426351853,
    0.0,
    0.03849125048223508,
    0.0,
    0.009871066299062077,
    0.0,
    -0.0033107597608584044,
    0.0,
    -0.0014647808577954152,
    0.0,
    -1.3207940624876963e-05,
    0.0,
    5.9227487018471416e-05,
    0.0,
    5.980242585373449e-06,
    0.0,
    -9.641322456169826e-07,
    0.0,
    -1.8334733722714413e-07,
    0.0,
    4.4670875627178334e-09,
    0.0,
    2.7096350821772744e-09,
    0.0,
    7.785288654315851e-11,
    0.0,
    -2.343762601089369e-11,
    0.0,
    -1.5830172789987521e-12,
    0.0,
    1.211994157372379e-13,
    0.0,
    1.4583781161108306e-14,
    0.0,
    -2.878630525813192e-16,
    0.0,
    -8.662862902123724e-17,
    0.0,
    -8.430722727137041e-19,
    0.0,
    3.6308072230973464e-19,
    0.0,
    1.1626698212838296e-20,
    0.0,
    -1.0975486711527531e-21,
];

pub(crate) const C2: [f64; 47] = [
    0.005188542830293168,
    0.0,
    0.00030946583880634744,
    0.0,
    -0.011335941078229373,
    0.0,
    0.0022330457419581446,
    0.0,
    0.00519663740886233,
    0.0,
    0.0003439914407620834,
    0.0,
    -0.0005910648427470583,
    0.0,
    -0.00010229972547935857,
    0.0,
    2.0888392216992754e-05,
    0.0,
    5.927665493096536e-06,
    0.0,
    -1.6423838362436276e-07,
    0.0,
    -1.5161199700940684e-07,
    0.0,
    -5.907803698206668e-09,
    0.0,
    2.0911514859478188e-09,
    0.0,
    1.781564958329235e-10,
    0.0,
    -1.6164072455353832e-11,
    0.0,
    -2.3806962496667617e-12,
    0.0,
    5.398265295542595e-14,
    0.0,
    1.9750142196969516e-14,
    0.0,
    2.3332868732882633e-16,
    0.0,
    -1.118751761004808e-16,
    0.0,
    -4.164009488883767e-18,
    0.0,
    4.446081109291883e-19,
    0.0,
    2.8546114783637145e-20,
];

pub(crate) const C3: [f64; 48] = [
    0.0,
    -0.0013397160907194568,
    0.0,
    0.003744215136379394,
    0.0,
    -0.0013303178919321468,
    0.0,
    -0.0022654660765471786,
    0.0,
    0.0009548499998506731,
    0.0,
    0.0006010038458963604,
    0.0,
    -0.00010128858286776622,
    0.0,
    -6.865733449299826e-05,
    0.0,
    5.985366791538599e-07,
    0.0,
    3.331659851239947e-06,
    0.0,
    2.1919289102435082e-07,
    0.0,
    -7.890884245681494e-08,
    0.0,
    -9.414685081295262e-09,
    0.0,
    9.57011621088348e-10,
    0.0,
    1.8763137453470662e-10,
    0.0,
    -4.4378376793233995e-12,
    0.0,
    -2.242673850561735e-12,
    0.0,
    -3.6276868657352434e-14,
    0.0,
    1.7639809550821582e-14,
    0.0,
    7.960765246786778e-16,
    0.0,
    -9.419651490589691e-17,
    0.0,
    -7.133103854569658e-18,
    0.0,
    3.2899105845546245e-19,
    0.0,
    4.1807303748984594e-20,
];

pub(crate) const C4: [f64; 47] = [
    0.00046483389361763383,
    0.0,
    -0.001005660736534047,
    0.0,
    0.00024044856573725794,
    0.0,
    0.0010283086149702322,
    0.0,
    -0.0007657861071755644,
    0.0,
    -0.00020365286803084818,
    0.0,
    0.0002321229049106873,
    0.0,
    3.2602144243865195e-05,
    0.0,
    -2.5579062517949524e-05,
    0.0,
    -4.107464438915745e-06,
    0.0,
    1.1781113640371294e-06,
    0.0,
    2.445656142248458e-07,
    0.0,
    -2.3915824767344323e-08,
    0.0,
    -7.505214207035756e-09,
    0.0,
    1.3312279416258429e-10,
    0.0,
    1.344062675422562e-10,
    0.0,
    3.513770042430486e-12,
    0.0,
    -1.519154453370392e-12,
    0.0,
    -8.915417681447087e-14,
    0.0,
    1.1195891165228536e-14,
    0.0,
    1.0516013329914816e-15,
    0.0,
    -5.1786552736466835e-17,
    0.0,
    -8.065874861916566e-18,
    0.0,
    1.0608204530563966e-19,
];

/// `B_{2k} / (2k)!` for k = 1..=20.
pub(crate) const BERNOULLI_OVER_FACTORIAL: [f64; 20] = [
    0.08333333333333333,
    -0.001388888888888889,
    3.306878306878307e-05,
    -8.267195767195768e-07,
    2.08767569878681e-08,
    -5.284190138687493e-10,
    1.3382536530684679e-11,
    -3.3896802963225827e-13,
    8.586062056277845e-15,
    -2.174868698558062e-16,
    5.5090028283602295e-18,
    -1.3954464685812522e-19,
    3.534707039629467e-21,
    -8.953517427037546e-23,
    2.267952452337683e-24,
    -5.744790668872202e-26,
    1.455172475614865e-27,
    -3.6859949406653103e-29,
    9.336734257095045e-31,
    -2.36502241570063e-32,
];

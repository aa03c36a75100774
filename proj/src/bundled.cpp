#include <sstream>

#include "zfr/polyfile.hpp"

namespace zfr {

namespace {

constexpr const char* kP40 = R"(# Degree-40 non-negative cosine polynomial, generator coefficients c_k.
# P(x) = |sum c_k e^(ikx)|^2 / sum c_k^2, b = 3.56453965437134.
0 1
1 8.70590487645377
2 253.542513581082
3 538.912985014916
4 1421.76588050758
5 3062.1230018832
6 5755.1498181548
7 9653.05616924715
8 14967.239037407
9 21237.398416925
10 27168.5781338032
11 31408.8257398599
12 32409.0713030987
13 28642.8233658012
14 19217.7742754807
15 6084.93971979693
16 -6971.7133423118
17 -16051.2777747034
18 -17900.8974008674
19 -10944.9022767045
20 2745.65474520683
21 14616.1664568754
22 15112.6306248979
23 3281.48150931095
24 -9858.76392710328
25 -11913.1717506499
26 -2607.30174667086
27 6649.42849986177
28 6689.88754688983
29 193.678093993709
30 -3912.86637215382
31 -2318.83016640653
32 911.79644433382
33 1499.03441911128
34 159.800369623307
35 -551.30680615611
36 -146.185445028008
37 160.626530894317
38 9.7531801403406
39 -46.7104974975636
40 23.9407317021713
)";

constexpr const char* kP46 = R"(# Degree-46 non-negative cosine polynomial, generator coefficients c_k.
# P(x) = |sum c_k e^(ikx)|^2 / sum c_k^2, b = 3.57440943022073.
0 1
1 338.377844758599
2 -219.537480547081
3 -736.781312848966
4 914.902037465737
5 1915.78694475716
6 -1310.28600595906
7 -3389.853917904
8 1732.46060916218
9 6943.01235038993
10 -278.171504957099
11 -11594.9052445657
12 -4279.8222109347
13 14539.7736361703
14 11710.3298598379
15 -18824.0950949349
16 -33323.9900467912
17 -663.769351563045
18 34162.7992046244
19 7425.01374396162
20 -56820.1949038606
21 -60583.1989268389
22 27278.3371854473
23 101206.908417904
24 49282.888742825
25 -72469.9665724928
26 -80343.7855839228
27 130557.454262211
28 456655.665589724
29 686366.255781866
30 690091.748824027
31 504386.928024044
32 256781.756010027
33 60405.4597040306
34 -37039.4291423529
35 -49829.9664619879
36 -22696.5925525196
37 1689.57285600626
38 9780.98700327532
39 10336.0633101459
40 9993.04428459519
41 9558.78229646887
42 7861.68784142526
43 6657.72906076572
44 4736.89926522741
45 2233.04706685592
46 504.683217557847
)";

PolyFile parse_text(const char* text, const char* name) {
  std::istringstream in(text);
  return parse_poly_file(in, name);
}

}  // namespace

const PolyFile& bundled_p40() {
  static const PolyFile file = parse_text(kP40, "<bundled p40>");
  return file;
}

const PolyFile& bundled_p46() {
  static const PolyFile file = parse_text(kP46, "<bundled p46>");
  return file;
}

}  // namespace zfr

#include "negord/typos.hpp"

#include <algorithm>

namespace negord {

namespace {

std::vector<KnownTypo> build() {
  std::vector<KnownTypo> t;
  auto add = [&](std::string fam, std::string lam, long n, long k, std::string printed,
                 std::optional<std::string> value, std::string reason) {
    t.push_back({std::move(fam), std::move(lam), n, k, std::move(printed), std::move(value), std::move(reason)});
  };

  // y1, symbolic table
  const std::string y1_row0 =
      "y1(0,k;lambda) = (lambda+1)^k/k! has constant term 1/k!; the lambda = 1 table row n = 0 "
      "(2, 2, 4/3, 2/3) includes it";
  add("y1", "symbolic", 0, 1, "L", R"({"1":"1"})", y1_row0);
  add("y1", "symbolic", 0, 2, "1/2*L^2 + L", R"({"1":"1","2":"1/2"})", y1_row0);
  add("y1", "symbolic", 0, 3, "1/6*L^3 + 1/2*L^2 + 1/2*L", R"({"1":"1/2","2":"1/2","3":"1/6"})", y1_row0);
  add("y1", "symbolic", 0, 4, "1/24*L^4 + 1/6*L^3 + 1/4*L^2 + 1/6*L",
      R"({"1":"1/6","2":"1/4","3":"1/6","4":"1/24"})", y1_row0);
  add("y1", "symbolic", 4, 3, "27/2*L^3 + 8*L + 1/2*L", R"({"1":"17/2","3":"27/2"})",
      "the L^2 coefficient of y1(n,3;lambda) is C(3,2) 2^n/3! = 2^{n-1}, so 8*L^2 at n = 4");
  add("y1", "symbolic", 5, 3, "81/2*L^3 + 816*L + 1/2*L", R"({"1":"1633/2","3":"81/2"})",
      "the L^2 coefficient is 2^{n-1} = 16; at lambda = 1 the printed cell gives 857, the numeric table 57");

  // y2, symbolic table
  const std::string y2_row0 =
      "y2(0,k;lambda) = (sqrt(lambda) + 1/sqrt(lambda))^{2k}/(2k)! has constant term C(2k,k)/(2k)!; "
      "the printed cell drops it";
  add("y2", "symbolic", 0, 1, "L/2 + 1/(2L)", R"({"-1":"1/2","1":"1/2"})", y2_row0);
  add("y2", "symbolic", 0, 2, "(L^2+4L)/24 + (4L+1)/(24L^2)", R"({"-2":"1/24","-1":"1/6","1":"1/6","2":"1/24"})",
      y2_row0);
  add("y2", "symbolic", 0, 3, "(L^3+6L^2)/720 + L/48 + 1/(48L) + (6L+1)/(720L^3)",
      R"({"-3":"1/720","-2":"1/120","-1":"1/48","1":"1/48","2":"1/120","3":"1/720"})", y2_row0);
  add("y2", "symbolic", 1, 2, "(L^2+2L)/12 - (2L+1)/(6L^2)", R"({"-2":"-1/6","-1":"-1/3","1":"1/6","2":"1/12"})",
      "y2(n,k;1/lambda) = (-1)^n y2(n,k;lambda) forces the 1/L, 1/L^2 coefficients to be -1/6, -1/12");
  add("y2", "symbolic", 1, 3, "(L^3+4L^2)/240 + L/28 - 1/(48L) - (4L+1)/(240L^3)",
      R"({"-3":"-1/240","-2":"-1/60","-1":"-1/48","1":"1/28","2":"1/60","3":"1/240"})",
      "mirror symmetry pairs the L coefficient with -(-1/48), so L/48");
  add("y2", "symbolic", 4, 2, "(2L^2+L)/3 + (L+4)/(6L^2)", R"({"-2":"2/3","-1":"1/6","1":"1/3","2":"2/3"})",
      "mirror symmetry pairs the L coefficient with 1/6; at lambda = 1 the printed cell gives 11/6, the numeric "
      "table 5/3");

  // y2 at lambda = 1, the separate n = 0 list
  add("y2", "1", 0, 3, "5/36", "5/36", "y2(0,k;1) = 4^k/(2k)! = 64/720 = 4/45");
  add("y2", "1", 0, 4, "63/5292", "1/84", "y2(0,k;1) = 4^k/(2k)! = 256/40320 = 2/315");

  // E_n^(-k)(1)
  const std::string e_row0 = "E_0^(-k)(1) = ((1+1)/2)^k = 1 with 0^0 = 1";
  const char* row0[] = {"1/2", "3/4", "7/8", "15/16", "33/32", "33/64", "81/64"};
  for (long k = 1; k <= 7; ++k) add("e-neg", "1", 0, k, row0[k - 1], std::string(row0[k - 1]), e_row0);
  add("e-neg", "1", 0, 8, "...", std::nullopt, e_row0);
  add("e-neg", "1", 0, 9, "...", std::nullopt, e_row0);
  const std::string e_row9 =
      "the printed row equals E_10^(-k)(1); e.g. E_9^(-2)(1) = (2^9 + 2)/4 = 257/2 while (2^10 + 2)/4 = 513/2";
  const char* row9[] = {"513/2", "15531/2", "161365/2", "1951155/4", "8499057/4", "7418789", "22071123",
                        "232549335/4"};
  for (long k = 2; k <= 9; ++k) add("e-neg", "1", 9, k, row9[k - 2], std::string(row9[k - 2]), e_row9);
  return t;
}

}  // namespace

const std::vector<KnownTypo>& known_typos() {
  static const std::vector<KnownTypo> ledger = build();
  return ledger;
}

const KnownTypo* find_typo(std::string_view family, std::string_view lambda, long n, long k) {
  const auto& l = known_typos();
  auto it = std::find_if(l.begin(), l.end(), [&](const KnownTypo& t) {
    return t.family == family && t.lambda == lambda && t.n == n && t.k == k;
  });
  return it == l.end() ? nullptr : &*it;
}

}  // namespace negord

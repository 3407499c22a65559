#include "coinweigh/oeis.hpp"

namespace coinweigh {

// b-file snapshots for the referenced sequences so the checks run
// without network access.
const std::map<std::string, const char*>& oeis_fixtures() {
  static const std::map<std::string, const char*> fixtures = {
      {"A000292",
       "# A000292 (fixture)\n"
       "0 0\n1 1\n2 4\n3 10\n4 20\n5 35\n6 56\n7 84\n"
       "8 120\n9 165\n10 220\n11 286\n12 364\n13 455\n14 560\n15 680\n"
       "16 816\n17 969\n18 1140\n19 1330\n20 1540\n21 1771\n22 2024\n23 2300\n"
       "24 2600\n25 2925\n26 3276\n27 3654\n28 4060\n29 4495\n30 4960\n31 5456\n"
       "32 5984\n33 6545\n34 7140\n35 7770\n36 8436\n37 9139\n38 9880\n39 10660\n"},
      {"A002492",
       "# A002492 (fixture)\n"
       "1 4\n2 20\n3 56\n4 120\n5 220\n6 364\n7 560\n8 816\n"
       "9 1140\n10 1540\n11 2024\n12 2600\n13 3276\n14 4060\n15 4960\n16 5984\n"
       "17 7140\n18 8436\n19 9880\n20 11480\n21 13244\n22 15180\n23 17296\n24 19600\n"
       "25 22100\n26 24804\n27 27720\n28 30856\n29 34220\n30 37820\n31 41664\n32 45760\n"
       "33 50116\n34 54740\n35 59640\n36 64824\n37 70300\n38 76076\n39 82160\n40 88560\n"},
      {"A132124",
       "# A132124 (fixture)\n"
       "0 0\n1 3\n2 17\n3 50\n4 110\n5 205\n6 343\n7 532\n"
       "8 780\n9 1095\n10 1485\n11 1958\n12 2522\n13 3185\n14 3955\n15 4840\n"
       "16 5848\n17 6987\n18 8265\n19 9690\n20 11270\n21 13013\n22 14927\n23 17020\n"
       "24 19300\n25 21775\n26 24453\n27 27342\n28 30450\n29 33785\n30 37355\n31 41168\n"
       "32 45232\n33 49555\n34 54145\n35 59010\n36 64158\n37 69597\n38 75335\n39 81380\n"},
      {"A000447",
       "# A000447 (fixture)\n"
       "0 0\n1 1\n2 10\n3 35\n4 84\n5 165\n6 286\n7 455\n"
       "8 680\n9 969\n10 1330\n11 1771\n12 2300\n13 2925\n14 3654\n15 4495\n"
       "16 5456\n17 6545\n18 7770\n19 9139\n20 10660\n21 12341\n22 14190\n23 16215\n"
       "24 18424\n25 20825\n26 23426\n27 26235\n28 29260\n29 32509\n30 35990\n31 39711\n"
       "32 43680\n33 47905\n34 52394\n35 57155\n36 62196\n37 67525\n38 73150\n39 79079\n"},
      {"A259110",
       "# A259110 (fixture)\n"
       "1 2\n2 20\n3 70\n4 168\n5 330\n6 572\n7 910\n8 1360\n"
       "9 1938\n10 2660\n11 3542\n12 4600\n13 5850\n14 7308\n15 8990\n16 10912\n"
       "17 13090\n18 15540\n19 18278\n20 21320\n21 24682\n22 28380\n23 32430\n24 36848\n"
       "25 41650\n26 46852\n27 52470\n28 58520\n29 65018\n30 71980\n31 79422\n32 87360\n"
       "33 95810\n34 104788\n35 114310\n36 124392\n37 135050\n38 146300\n39 158158\n40 170640\n"},
      {"A267031",
       "# A267031 (fixture)\n"
       "1 10\n2 84\n3 286\n4 680\n5 1330\n6 2300\n7 3654\n8 5456\n"
       "9 7770\n10 10660\n11 14190\n12 18424\n13 23426\n14 29260\n15 35990\n16 43680\n"
       "17 52394\n18 62196\n19 73150\n20 85320\n21 98770\n22 113564\n23 129766\n24 147440\n"
       "25 166650\n26 187460\n27 209934\n28 234136\n29 260130\n30 287980\n31 317750\n32 349504\n"
       "33 383306\n34 419220\n35 457310\n36 497640\n37 540274\n38 585276\n39 632710\n40 682640\n"},
      {"A015219",
       "# A015219 (fixture)\n"
       "0 1\n1 35\n2 165\n3 455\n4 969\n5 1771\n6 2925\n7 4495\n"
       "8 6545\n9 9139\n10 12341\n11 16215\n12 20825\n13 26235\n14 32509\n15 39711\n"
       "16 47905\n17 57155\n18 67525\n19 79079\n20 91881\n21 105995\n22 121485\n23 138415\n"
       "24 156849\n25 176851\n26 198485\n27 221815\n28 246905\n29 273819\n30 302621\n31 333375\n"
       "32 366145\n33 400995\n34 437989\n35 477191\n36 518665\n37 562475\n38 608685\n39 657359\n"},
      {"A147875",
       "# A147875 (fixture)\n"
       "0 0\n1 4\n2 13\n3 27\n4 46\n5 70\n6 99\n7 133\n"
       "8 172\n9 216\n10 265\n11 319\n12 378\n13 442\n14 511\n15 585\n"
       "16 664\n17 748\n18 837\n19 931\n20 1030\n21 1134\n22 1243\n23 1357\n"
       "24 1476\n25 1600\n26 1729\n27 1863\n28 2002\n29 2146\n30 2295\n31 2449\n"
       "32 2608\n33 2772\n34 2941\n35 3115\n36 3294\n37 3478\n38 3667\n39 3861\n"},
      {"A079273",
       "# A079273 (fixture)\n"
       "0 1\n1 10\n2 29\n3 58\n4 97\n5 146\n6 205\n7 274\n"
       "8 353\n9 442\n10 541\n11 650\n12 769\n13 898\n14 1037\n15 1186\n"
       "16 1345\n17 1514\n18 1693\n19 1882\n20 2081\n21 2290\n22 2509\n23 2738\n"
       "24 2977\n25 3226\n26 3485\n27 3754\n28 4033\n29 4322\n30 4621\n31 4930\n"
       "32 5249\n33 5578\n34 5917\n35 6266\n36 6625\n37 6994\n38 7373\n39 7762\n"},
  };
  return fixtures;
}

}  // namespace coinweigh

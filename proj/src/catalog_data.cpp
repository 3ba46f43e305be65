#include "catalog_data.hpp"

namespace resonantk::detail {

const std::vector<FrozenGraph>& frozen_graphs() {
  static const std::vector<FrozenGraph> graphs = {
      {"F28", "1 2 3 4 5 7 10 12 13 14 15 16", R"rot(
28
0: 1 5 2
1: 0 4 6
2: 0 8 3
3: 2 10 4
4: 1 3 12
5: 0 7 9
6: 1 14 7
7: 5 6 16
8: 2 9 11
9: 5 18 8
10: 3 11 13
11: 8 20 10
12: 4 13 15
13: 10 22 12
14: 6 15 17
15: 12 23 14
16: 7 17 19
17: 14 25 16
18: 9 19 21
19: 16 26 18
20: 11 21 22
21: 18 27 20
22: 13 20 24
23: 15 24 25
24: 22 27 23
25: 17 23 26
26: 19 25 27
27: 21 26 24
)rot"},
      {"F30", "1 2 3 4 7 10 11 12 13 14 15 16", R"rot(
30
0: 1 5 2
1: 0 4 6
2: 0 8 3
3: 2 10 4
4: 1 3 12
5: 0 7 9
6: 1 15 7
7: 5 6 17
8: 2 9 11
9: 5 19 8
10: 3 11 13
11: 8 21 10
12: 4 14 16
13: 10 23 14
14: 12 13 24
15: 6 16 18
16: 12 26 15
17: 7 18 20
18: 15 27 17
19: 9 20 22
20: 17 28 19
21: 11 22 23
22: 19 29 21
23: 13 21 25
24: 14 25 26
25: 23 29 24
26: 16 24 27
27: 18 26 28
28: 20 27 29
29: 22 28 25
)rot"},
      {"F32", "1 2 3 4 7 10 11 13 14 16 17 18", R"rot(
32
0: 1 5 2
1: 0 4 6
2: 0 8 3
3: 2 10 4
4: 1 3 12
5: 0 7 9
6: 1 15 7
7: 5 6 17
8: 2 9 11
9: 5 19 8
10: 3 11 13
11: 8 21 10
12: 4 14 16
13: 10 23 14
14: 12 13 24
15: 6 16 18
16: 12 26 15
17: 7 18 20
18: 15 28 17
19: 9 20 22
20: 17 29 19
21: 11 22 23
22: 19 30 21
23: 13 21 25
24: 14 25 27
25: 23 30 24
26: 16 27 28
27: 24 31 26
28: 18 26 29
29: 20 28 31
30: 22 31 25
31: 27 30 29
)rot"},
      {"F36_1", "1 2 3 4 7 10 12 15 17 18 19 20", R"rot(
36
0: 1 5 2
1: 0 4 6
2: 0 8 3
3: 2 10 4
4: 1 3 12
5: 0 7 9
6: 1 15 7
7: 5 6 17
8: 2 9 11
9: 5 19 8
10: 3 11 13
11: 8 21 10
12: 4 14 16
13: 10 23 14
14: 12 13 24
15: 6 16 18
16: 12 27 15
17: 7 18 20
18: 15 28 17
19: 9 20 22
20: 17 30 19
21: 11 22 23
22: 19 32 21
23: 13 21 25
24: 14 26 27
25: 23 33 26
26: 24 25 34
27: 16 24 29
28: 18 29 31
29: 27 34 28
30: 20 31 32
31: 28 35 30
32: 22 30 33
33: 25 32 35
34: 26 35 29
35: 31 34 33
)rot"},
      {"F36_2", "1 2 3 4 7 10 11 14 17 18 19 20", R"rot(
36
0: 1 5 2
1: 0 4 6
2: 0 8 3
3: 2 10 4
4: 1 3 12
5: 0 7 9
6: 1 15 7
7: 5 6 17
8: 2 9 11
9: 5 19 8
10: 3 11 13
11: 8 21 10
12: 4 14 16
13: 10 23 14
14: 12 13 24
15: 6 16 18
16: 12 26 15
17: 7 18 20
18: 15 28 17
19: 9 20 22
20: 17 30 19
21: 11 22 23
22: 19 31 21
23: 13 21 25
24: 14 25 27
25: 23 33 24
26: 16 27 29
27: 24 34 26
28: 18 29 30
29: 26 35 28
30: 20 28 32
31: 22 32 33
32: 30 35 31
33: 25 31 34
34: 27 33 35
35: 29 34 32
)rot"},
      {"F40", "1 2 4 7 9 11 13 15 18 19 21 22", R"rot(
40
0: 1 5 2
1: 0 4 6
2: 0 8 3
3: 2 11 4
4: 1 3 13
5: 0 7 9
6: 1 16 7
7: 5 6 18
8: 2 10 12
9: 5 20 10
10: 8 9 22
11: 3 12 14
12: 8 24 11
13: 4 15 17
14: 11 26 15
15: 13 14 27
16: 6 17 19
17: 13 30 16
18: 7 19 21
19: 16 31 18
20: 9 21 23
21: 18 33 20
22: 10 23 25
23: 20 34 22
24: 12 25 26
25: 22 36 24
26: 14 24 28
27: 15 29 30
28: 26 36 29
29: 27 28 38
30: 17 27 32
31: 19 32 33
32: 30 39 31
33: 21 31 35
34: 23 35 37
35: 33 39 34
36: 25 37 28
37: 34 38 36
38: 29 37 39
39: 32 38 35
)rot"},
      {"F48", "1 2 4 7 11 15 19 20 23 24 25 26", R"rot(
48
0: 1 5 2
1: 0 4 6
2: 0 8 3
3: 2 11 4
4: 1 3 13
5: 0 7 9
6: 1 16 7
7: 5 6 18
8: 2 10 12
9: 5 20 10
10: 8 9 22
11: 3 12 14
12: 8 25 11
13: 4 15 17
14: 11 27 15
15: 13 14 28
16: 6 17 19
17: 13 31 16
18: 7 19 21
19: 16 33 18
20: 9 21 23
21: 18 35 20
22: 10 24 26
23: 20 36 24
24: 22 23 38
25: 12 26 27
26: 22 41 25
27: 14 25 29
28: 15 30 32
29: 27 41 30
30: 28 29 43
31: 17 32 34
32: 28 44 31
33: 19 34 35
34: 31 46 33
35: 21 33 37
36: 23 37 39
37: 35 46 36
38: 24 40 42
39: 36 47 40
40: 38 39 45
41: 26 42 29
42: 38 43 41
43: 30 42 45
44: 32 45 47
45: 40 44 43
46: 34 47 37
47: 39 46 44
)rot"},
      {"C70", "1 7 9 11 13 15 27 29 31 33 35 37", R"rot(
70
0: 1 5 2
1: 0 4 6
2: 0 9 3
3: 2 12 4
4: 1 3 15
5: 0 8 10
6: 1 18 7
7: 6 20 8
8: 5 7 22
9: 2 11 13
10: 5 25 11
11: 9 10 26
12: 3 14 16
13: 9 29 14
14: 12 13 30
15: 4 17 19
16: 12 33 17
17: 15 16 34
18: 6 19 21
19: 15 37 18
20: 7 21 23
21: 18 38 20
22: 8 24 25
23: 20 40 24
24: 22 23 42
25: 10 22 27
26: 11 28 29
27: 25 45 28
28: 26 27 46
29: 13 26 31
30: 14 32 33
31: 29 49 32
32: 30 31 50
33: 16 30 35
34: 17 36 37
35: 33 53 36
36: 34 35 54
37: 19 34 39
38: 21 39 41
39: 37 57 38
40: 23 41 43
41: 38 58 40
42: 24 44 45
43: 40 60 44
44: 42 43 61
45: 27 42 47
46: 28 48 49
47: 45 61 48
48: 46 47 64
49: 31 46 51
50: 32 52 53
51: 49 64 52
52: 50 51 66
53: 35 50 55
54: 36 56 57
55: 53 66 56
56: 54 55 68
57: 39 54 59
58: 41 59 60
59: 57 68 58
60: 43 58 63
61: 44 62 47
62: 61 63 65
63: 60 69 62
64: 48 65 51
65: 62 67 64
66: 52 67 55
67: 65 69 66
68: 56 69 59
69: 63 68 67
)rot"},
  };
  return graphs;
}

}  // namespace resonantk::detail

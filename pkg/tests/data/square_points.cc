# unit square vertices (0,0) (1,0) (1,1) (0,1) as vectors (1,x,y)
12 4
00++
00--
0-0+
0+0-
0--0
0++0
+00+
-00-
+0-0
-0+0
++00
--00

# coding: utf-8

# # Dot-matrix glyphs
#
# Glyphs are 7 rows by 5 columns. A glyph file lists blocks of a
# `name:` line and seven rows of `#`/`.` cells. Each glyph is scanned
# row by row (horizontal) or column by column (vertical) into 35 bits.

# In[1]:

from bientropy.glyphs import charset_table, parse_glyph_file, raster

text = """
name: 0
.###.
#...#
#..##
#.#.#
##..#
#...#
.###.

name: 1
..#..
.##..
..#..
..#..
..#..
..#..
.###.

name: 7
#####
....#
...#.
..#..
.#...
.#...
.#...
"""
glyphs = parse_glyph_file(text)


# In[2]:

for g in glyphs:
    print(g.name, raster(g, "horizontal"), raster(g, "vertical"))


# Per-glyph scores in all four metric/orientation pairs, then set statistics:

# In[3]:

table = charset_table(glyphs)
for key, rep in table.items():
    print(key, [round(s, 4) for s in rep.scores], "mean", round(rep.stats.mean, 4))

"""Verbatim sample records (record-format fixtures); LaTeX escapes removed."""

EMBEDDING_P_EDGES = '[[0,4],[0,5],[0,7],[0,8],[1,2],[1,3],[1,6],[1,8],[2,4],[2,7],[2,8],[3,5],[3,6],[3,7],[4,6],[4,8],[5,6],[5,7]]'
EMBEDDING_P_TOP2 = 'N0:[4,5,#4,#4]; N1:[2,3,#4,#4]; N2:[1,4,#4,#4]; N3:[1,5,#4,#4]; N4:[0,2,#4,#4]; N5:[0,3,#4,#4]; N6:[1,3,#4,#4]; N7:[0,2,#4,#4]; N8:[0,1,#4,#4]'
EMBEDDING_G_EDGES = '[[0,4],[0,5],[0,6],[0,7],[1,4],[1,5],[1,6],[1,7],[2,4],[2,5],[2,6],[2,7],[3,4],[3,5],[3,6],[3,7],[4,12],[5,13],[6,14],[7,15],[8,12],[8,13],[8,14],[8,15],[9,12],[9,13],[9,14],[9,15],[10,12],[10,13],[10,14],[10,15],[11,12],[11,13],[11,14],[11,15],[12,20],[13,21],[14,22],[15,23],[16,20],[16,21],[16,22],[16,23],[17,20],[17,21],[17,22],[17,23],[18,20],[18,21],[18,22],[18,23],[19,20],[19,21],[19,22],[19,23]]'
# the printed block ends with a stray ':' which is dropped here
EMBEDDING_G_TOP2 = 'N0:[4,5,#5,#5]; N1:[4,5,#5,#5]; N2:[4,5,#5,#5]; N3:[4,5,#5,#5]; N4:[12,0,#6,#4]; N5:[13,0,#6,#4]; N6:[14,0,#6,#4]; N7:[15,0,#6,#4]; N8:[12,13,#6,#6]; N9:[12,13,#6,#6]; N10:[12,13,#6,#6]; N11:[12,13,#6,#6]; N12:[4,20,#5,#5]; N13:[5,21,#5,#5]; N14:[6,22,#5,#5]; N15:[7,23,#5,#5]; N16:[20,21,#5,#5]; N17:[20,21,#5,#5]; N18:[20,21,#5,#5]; N19:[20,21,#5,#5]; N20:[12,16,#6,#4]; N21:[13,16,#6,#4]; N22:[14,16,#6,#4]; N23:[15,16,#6,#4]'
EMBEDDING_OUTPUT = 'yes, embedding: {"0": [6,14], "1": [1,7,15], "2": [4], "3": [16,23], "4": [3,5], "5": [18,22], "6": [8,13,21], "7": [10,12,20], "8": [0], total nodes used: 19}'

COLORING_EDGES = '[(0,9),(0,10),(0,11),(0,4),(1,11),(1,4),(1,7),(2,6),(2,5),(3,8),(3,9),(4,7),(4,5),(4,10),(5,9),(5,11),(7,10),(8,9),(9,11)]'
COLORING_TOP2 = 'N0:[4,9,#5,#5]; N1:[4,11,#5,#4]; N2:[5,6,#4,#1]; N3:[9,8,#5,#2]; N4:[0,5,#4,#4]; N5:[4,9,#5,#5]; N6:[2,#2]; N7:[4,1,#5,#3]; N8:[9,3,#5,#2]; N9:[0,5,#4,#4]; N10:[4,0,#5,#4]; N11:[9,0,#5,#4]'
COLORING_OUTPUT = 'Yes, coloring: [0, 1, 1, 2, 2, 0, 0, 0, 0, 1, 1, 2]'

MINCOLORING_EDGES = '[(0,44),(0,41),(0,34),(0,43),(0,38),(1,12),(1,23),(1,6),(2,45),(2,6),(2,24),(2,3),(2,12),(3,40),(3,24),(3,33),(3,45),(4,45),(4,13),(4,31),(4,33),(4,42),(4,14),(5,37),(5,21),(5,15),(6,11),(6,45),(6,26),(6,12),(7,19),(7,37),(7,30),(7,22),(8,41),(8,22),(8,35),(8,44),(8,30),(9,28),(9,45),(10,36),(10,40),(10,24),(10,16),(10,41),(11,23),(11,39),(12,29),(12,15),(13,42),(13,14),(13,18),(13,36),(14,18),(15,25),(15,29),(15,37),(16,40),(16,18),(16,36),(17,23),(17,32),(17,29),(17,47),(18,36),(18,31),(18,40),(18,33),(19,32),(19,29),(19,22),(20,23),(20,39),(21,37),(21,34),(21,27),(21,38),(21,30),(22,30),(22,32),(22,47),(23,29),(23,39),(24,25),(24,41),(24,43),(24,38),(24,40),(25,38),(26,45),(26,42),(27,34),(27,35),(27,46),(28,42),(29,32),(29,37),(32,47),(33,40),(34,46),(35,44),(35,46),(39,42),(39,47),(41,44),(41,43),(44,46)]'
MINCOLORING_TOP2 = 'N0:[41,44,#6,#5]; N1:[6,23,#6,#6]; N2:[24,6,#8,#6]; N3:[24,40,#8,#6]; N4:[45,13,#6,#5]; N5:[21,15,#6,#5]; N6:[45,2,#6,#5]; N7:[22,37,#6,#5]; N8:[22,41,#6,#6]; N9:[45,28,#6,#2]; N10:[24,40,#8,#6]; N11:[6,23,#6,#6]; N12:[29,6,#7,#6]; N13:[18,4,#7,#6]; N14:[18,4,#7,#6]; N15:[29,12,#7,#5]; N16:[18,40,#7,#6]; N17:[29,23,#7,#6]; N18:[40,13,#6,#5]; N19:[29,22,#7,#6]; N20:[23,39,#6,#5]; N21:[37,27,#5,#4]; N22:[8,32,#5,#5]; N23:[29,39,#7,#5]; N24:[40,41,#6,#6]; N25:[24,15,#8,#5]; N26:[6,45,#6,#6]; N27:[21,34,#6,#4]; N28:[42,9,#5,#2]; N29:[23,12,#6,#5]; N30:[21,22,#6,#6]; N31:[18,4,#7,#6]; N32:[29,22,#7,#6]; N33:[18,4,#7,#6]; N34:[21,0,#6,#5]; N35:[8,44,#5,#5]; N36:[18,10,#7,#5]; N37:[29,21,#7,#6]; N38:[24,21,#8,#6]; N39:[23,42,#6,#5]; N40:[24,18,#8,#7]; N41:[24,0,#8,#5]; N42:[4,13,#6,#5]; N43:[24,41,#8,#6]; N44:[41,0,#6,#5]; N45:[4,6,#6,#6]; N46:[44,27,#5,#4]; N47:[22,32,#6,#5]'
MINCOLORING_OUTPUT = 'min_colors: 4, coloring: [3, 0, 1, 0, 0, 0, 3, 1, 0, 3, 0, 0, 2, 1, 3, 1, 2, 0, 0, 0, 0, 3, 3, 2, 3, 0, 0, 1, 0, 3, 2, 3, 2, 3, 2, 3, 3, 2, 2, 3, 1, 2, 2, 0, 1, 2, 0, 1]'

EMBEDDING_INSTRUCTION = 'Given a problem graph P with 9 nodes labeled 0..8 and a hardware graph G with 24 nodes, both undirected and given by edge lists, determine whether P can be minor-embedded into G. A valid embedding maps each problem node to a connected chain of hardware nodes, chains for different problem nodes are disjoint, and every problem edge (u,v) must be realized by at least one hardware edge between the two corresponding chains. Limit the chain size up to 3 nodes. Among feasible embeddings, minimize the total number of hardware nodes used. The input also provides, for each node, up to 2 neighbors with highest degree in the form Ni:[a,b,#c,#d], where a,b are neighbors and #c,#d are their degrees. Output exactly one of the following formats: yes, embedding: {problem_node: [hardware_nodes], ...}, total nodes used: {n_nodes_used} or no.'

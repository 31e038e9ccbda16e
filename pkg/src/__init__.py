# Petri Net Homology
# Integral and directed homology of elementary Petri nets

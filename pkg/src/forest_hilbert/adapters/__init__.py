# Adapters package: interchangeable row-echelon backends

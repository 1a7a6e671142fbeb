"""Gabriel-Roiter measures for quivers of type Ã_n."""

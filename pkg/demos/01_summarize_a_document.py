"""Summarize a single document step by step.

Walks through the full pipeline: segmentation, tf-idf sentence vectors,
the thresholded similarity graph, and multi-round selection, printing the
intermediate pieces along the way.
"""

from multisum import (SummarizerConfig, build_similarity_matrix, compute_threshold,
                      apply_threshold, document_from_text, encode_tfidf,
                      fit_tfidf, select_multi_round)

TEXT = (
    "The probe entered orbit around the outer moon on Tuesday. "
    "Mission control confirmed the orbit within the hour. "
    "Local cafes near the space center stayed open late. "
    "The probe's antenna then returned the first orbital images. "
    "Those images show fractures across the moon's icy crust. "
    "Reporters asked mostly about the budget."
)

doc = document_from_text("demo", TEXT, "latin")
print(f"{doc.n} sentences:")
for s in doc.sentences:
    print(f"  [{s.index}] {s.raw}")

model = fit_tfidf([doc])
vectors = encode_tfidf(model, doc)
print(f"\ntf-idf vectors: {vectors.shape[0]} x {vectors.shape[1]} "
      f"(vocabulary size {len(model.vocabulary)})")

graph = build_similarity_matrix(vectors)
print(f"similarity range: [{graph.s_min:.3f}, {graph.s_max:.3f}]")

spec = compute_threshold(graph, a=0.2)
graph = apply_threshold(graph, spec)
print(f"threshold at a=0.2 -> TH={spec.th:.3f}")

config = SummarizerConfig(k=3, a=0.2, beta1=1.0, beta2=0.6,
                          alpha1=0.0, alpha2=0.0, method="multiround")
picked, state = select_multi_round(graph, config, return_state=True)

print(f"\nselection order: {state.selected}")
for iv in state.trace:
    rounded = [f"{x:.3f}" for x in iv.scores]
    print(f"  round {iv.round} scores: {rounded}")

print("\nsummary (document order):")
for i in picked:
    print(f"  {doc.sentences[i].raw}")

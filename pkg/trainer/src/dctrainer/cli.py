"""Command-line entry points: train a model, export probability maps."""

from __future__ import annotations

import argparse
from pathlib import Path

from .data import GraphData, load_many
from .formats import read_dimacs
from .losses import LOSS_MODES
from .model import load_model
from .train import TrainConfig, export_for_manifest, export_probmap, train


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="dctrainer",
                                     description="Train probability maps for the dominating-clique solver.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_train = sub.add_parser("train", help="train a model on manifest datasets")
    p_train.add_argument("--manifest", action="append", required=True,
                         help="manifest.json path (repeatable)")
    p_train.add_argument("--loss", choices=LOSS_MODES, default="dc")
    p_train.add_argument("--epochs", type=int, default=50)
    p_train.add_argument("--batch-size", type=int, default=32)
    p_train.add_argument("--lr", type=float, default=1e-3)
    p_train.add_argument("--hidden", type=int, default=64)
    p_train.add_argument("--seed", type=int, default=0)
    p_train.add_argument("--out-dir", required=True)

    p_infer = sub.add_parser("infer", help="write a probmap for one graph")
    p_infer.add_argument("--model", required=True)
    p_infer.add_argument("--graph", required=True)
    p_infer.add_argument("--out", required=True)

    p_export = sub.add_parser("export", help="write probmaps for every manifest instance")
    p_export.add_argument("--model", required=True)
    p_export.add_argument("--manifest", action="append", required=True)
    p_export.add_argument("--out-dir", required=True)

    args = parser.parse_args(argv)

    if args.command == "train":
        graphs = load_many(args.manifest)
        cfg = TrainConfig(loss=args.loss, epochs=args.epochs, batch_size=args.batch_size,
                          lr=args.lr, hidden=args.hidden, seed=args.seed)
        out = Path(args.out_dir)
        out.mkdir(parents=True, exist_ok=True)
        _, logs = train(graphs, cfg, log_path=out / "train_log.csv",
                        checkpoint_path=out / "model.pt")
        print(f"trained on {len(graphs)} graphs: "
              f"loss {logs[0].mean_loss:.4f} -> {logs[-1].mean_loss:.4f}")
        return 0

    if args.command == "infer":
        model = load_model(args.model)
        graph = GraphData.from_graph_file(Path(args.graph).stem, read_dimacs(args.graph))
        export_probmap(model, graph, args.out)
        print(f"wrote {args.out}")
        return 0

    model = load_model(args.model)
    graphs = load_many(args.manifest)
    written = export_for_manifest(model, graphs, args.out_dir)
    print(f"wrote {len(written)} probmaps to {args.out_dir}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

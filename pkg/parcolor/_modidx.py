# Autogenerated by nbdev

d = { 'settings': { 'branch': 'main',
                'doc_baseurl': '/parcolor',
                'doc_host': 'https://cj-mills.github.io',
                'git_url': 'https://github.com/cj-mills/parcolor',
                'lib_path': 'parcolor'},
  'syms': {
            'parcolor.bench.cli': { 'parcolor.bench.cli._fail': ('bench/cli.html#_fail', 'parcolor/bench/cli.py'),
                  'parcolor.bench.cli._setup_logging': ('bench/cli.html#_setup_logging', 'parcolor/bench/cli.py'),
                  'parcolor.bench.cli.bench': ('bench/cli.html#bench', 'parcolor/bench/cli.py'),
                  'parcolor.bench.cli.color': ('bench/cli.html#color', 'parcolor/bench/cli.py'),
                  'parcolor.bench.cli.main': ('bench/cli.html#main', 'parcolor/bench/cli.py'),
                  'parcolor.bench.cli.parse_threads': ('bench/cli.html#parse_threads', 'parcolor/bench/cli.py')},
            'parcolor.bench.config': { 'parcolor.bench.config.BenchConfig': ('bench/config.html#benchconfig', 'parcolor/bench/config.py'),
                  'parcolor.bench.config.BenchConfig.__post_init__': ('bench/config.html#benchconfig.__post_init__', 'parcolor/bench/config.py'),
                  'parcolor.bench.config.BenchConfig.from_saved_config': ('bench/config.html#benchconfig.from_saved_config', 'parcolor/bench/config.py'),
                  'parcolor.bench.config.BenchConfig.source_label': ('bench/config.html#benchconfig.source_label', 'parcolor/bench/config.py'),
                  'parcolor.bench.config.OutputConfig': ('bench/config.html#outputconfig', 'parcolor/bench/config.py'),
                  'parcolor.bench.config.OutputConfig.__post_init__': ('bench/config.html#outputconfig.__post_init__', 'parcolor/bench/config.py')},
            'parcolor.bench.registry': { 'parcolor.bench.registry.AlgorithmRegistry': ('bench/registry.html#algorithmregistry', 'parcolor/bench/registry.py'),
                  'parcolor.bench.registry.AlgorithmRegistry.__init__': ('bench/registry.html#algorithmregistry.__init__', 'parcolor/bench/registry.py'),
                  'parcolor.bench.registry.AlgorithmRegistry.get_algorithm': ('bench/registry.html#algorithmregistry.get_algorithm', 'parcolor/bench/registry.py'),
                  'parcolor.bench.registry.AlgorithmRegistry.list_algorithms': ('bench/registry.html#algorithmregistry.list_algorithms', 'parcolor/bench/registry.py'),
                  'parcolor.bench.registry.AlgorithmRegistry.names': ('bench/registry.html#algorithmregistry.names', 'parcolor/bench/registry.py'),
                  'parcolor.bench.registry.AlgorithmRegistry.register': ('bench/registry.html#algorithmregistry.register', 'parcolor/bench/registry.py'),
                  'parcolor.bench.registry._run_barrier': ('bench/registry.html#_run_barrier', 'parcolor/bench/registry.py'),
                  'parcolor.bench.registry._run_coarse': ('bench/registry.html#_run_coarse', 'parcolor/bench/registry.py'),
                  'parcolor.bench.registry._run_fine': ('bench/registry.html#_run_fine', 'parcolor/bench/registry.py'),
                  'parcolor.bench.registry._run_seq': ('bench/registry.html#_run_seq', 'parcolor/bench/registry.py')},
            'parcolor.bench.results': { 'parcolor.bench.results.BenchResult': ('bench/results.html#benchresult', 'parcolor/bench/results.py'),
                  'parcolor.bench.results.BenchResult.max_colors': ('bench/results.html#benchresult.max_colors', 'parcolor/bench/results.py'),
                  'parcolor.bench.results.BenchResult.max_rounds': ('bench/results.html#benchresult.max_rounds', 'parcolor/bench/results.py'),
                  'parcolor.bench.results._csv': ('bench/results.html#_csv', 'parcolor/bench/results.py'),
                  'parcolor.bench.results.emit_results': ('bench/results.html#emit_results', 'parcolor/bench/results.py'),
                  'parcolor.bench.results.parse_results': ('bench/results.html#parse_results', 'parcolor/bench/results.py')},
            'parcolor.bench.runner': { 'parcolor.bench.runner.load_graph': ('bench/runner.html#load_graph', 'parcolor/bench/runner.py'),
                  'parcolor.bench.runner.make_partition': ('bench/runner.html#make_partition', 'parcolor/bench/runner.py'),
                  'parcolor.bench.runner.measure': ('bench/runner.html#measure', 'parcolor/bench/runner.py'),
                  'parcolor.bench.runner.run_benchmark': ('bench/runner.html#run_benchmark', 'parcolor/bench/runner.py'),
                  'parcolor.bench.runner.run_once': ('bench/runner.html#run_once', 'parcolor/bench/runner.py')},
            'parcolor.core.coloring': { 'parcolor.core.coloring.Coloring': ('core/coloring.html#coloring', 'parcolor/core/coloring.py'),
                  'parcolor.core.coloring.Coloring.empty': ('core/coloring.html#coloring.empty', 'parcolor/core/coloring.py'),
                  'parcolor.core.coloring.Coloring.is_complete': ('core/coloring.html#coloring.is_complete', 'parcolor/core/coloring.py'),
                  'parcolor.core.coloring.Coloring.m': ('core/coloring.html#coloring.m', 'parcolor/core/coloring.py'),
                  'parcolor.core.coloring.ConflictReport': ('core/coloring.html#conflictreport', 'parcolor/core/coloring.py'),
                  'parcolor.core.coloring.ConflictReport.__len__': ('core/coloring.html#conflictreport.__len__', 'parcolor/core/coloring.py'),
                  'parcolor.core.coloring.ConflictReport.is_proper': ('core/coloring.html#conflictreport.is_proper', 'parcolor/core/coloring.py'),
                  'parcolor.core.coloring.color_classes': ('core/coloring.html#color_classes', 'parcolor/core/coloring.py'),
                  'parcolor.core.coloring.count_colors': ('core/coloring.html#count_colors', 'parcolor/core/coloring.py'),
                  'parcolor.core.coloring.export_coloring': ('core/coloring.html#export_coloring', 'parcolor/core/coloring.py'),
                  'parcolor.core.coloring.first_fit': ('core/coloring.html#first_fit', 'parcolor/core/coloring.py'),
                  'parcolor.core.coloring.sequential_color': ('core/coloring.html#sequential_color', 'parcolor/core/coloring.py'),
                  'parcolor.core.coloring.verify_coloring': ('core/coloring.html#verify_coloring', 'parcolor/core/coloring.py'),
                  'parcolor.core.coloring.write_coloring': ('core/coloring.html#write_coloring', 'parcolor/core/coloring.py')},
            'parcolor.core.errors': { 'parcolor.core.errors.EdgeListParseError': ('core/errors.html#edgelistparseerror', 'parcolor/core/errors.py'),
                  'parcolor.core.errors.EdgeListParseError.__init__': ('core/errors.html#edgelistparseerror.__init__', 'parcolor/core/errors.py'),
                  'parcolor.core.errors.IncompleteColoringError': ('core/errors.html#incompletecoloringerror', 'parcolor/core/errors.py'),
                  'parcolor.core.errors.IncompleteColoringError.__init__': ('core/errors.html#incompletecoloringerror.__init__', 'parcolor/core/errors.py'),
                  'parcolor.core.errors.PaletteExhaustedError': ('core/errors.html#paletteexhaustederror', 'parcolor/core/errors.py'),
                  'parcolor.core.errors.ParcolorError': ('core/errors.html#parcolorerror', 'parcolor/core/errors.py'),
                  'parcolor.core.errors.VerificationError': ('core/errors.html#verificationerror', 'parcolor/core/errors.py'),
                  'parcolor.core.errors.VerificationError.__init__': ('core/errors.html#verificationerror.__init__', 'parcolor/core/errors.py')},
            'parcolor.core.graph': { 'parcolor.core.graph.Graph': ('core/graph.html#graph', 'parcolor/core/graph.py'),
                  'parcolor.core.graph.Graph.__post_init__': ('core/graph.html#graph.__post_init__', 'parcolor/core/graph.py'),
                  'parcolor.core.graph.Graph.adjacency': ('core/graph.html#graph.adjacency', 'parcolor/core/graph.py'),
                  'parcolor.core.graph.Graph.degrees': ('core/graph.html#graph.degrees', 'parcolor/core/graph.py'),
                  'parcolor.core.graph.Graph.describe': ('core/graph.html#graph.describe', 'parcolor/core/graph.py'),
                  'parcolor.core.graph.Graph.edge_count': ('core/graph.html#graph.edge_count', 'parcolor/core/graph.py'),
                  'parcolor.core.graph.Graph.edges': ('core/graph.html#graph.edges', 'parcolor/core/graph.py'),
                  'parcolor.core.graph.Graph.from_edges': ('core/graph.html#graph.from_edges', 'parcolor/core/graph.py'),
                  'parcolor.core.graph.Graph.from_networkx': ('core/graph.html#graph.from_networkx', 'parcolor/core/graph.py'),
                  'parcolor.core.graph.Graph.min_degree': ('core/graph.html#graph.min_degree', 'parcolor/core/graph.py'),
                  'parcolor.core.graph.Graph.n': ('core/graph.html#graph.n', 'parcolor/core/graph.py'),
                  'parcolor.core.graph.Graph.neighbors_of': ('core/graph.html#graph.neighbors_of', 'parcolor/core/graph.py'),
                  'parcolor.core.graph._gnp': ('core/graph.html#_gnp', 'parcolor/core/graph.py'),
                  'parcolor.core.graph._read_pairs': ('core/graph.html#_read_pairs', 'parcolor/core/graph.py'),
                  'parcolor.core.graph._size': ('core/graph.html#_size', 'parcolor/core/graph.py'),
                  'parcolor.core.graph.generate_synthetic': ('core/graph.html#generate_synthetic', 'parcolor/core/graph.py'),
                  'parcolor.core.graph.load_edge_list': ('core/graph.html#load_edge_list', 'parcolor/core/graph.py'),
                  'parcolor.core.graph.max_degree': ('core/graph.html#max_degree', 'parcolor/core/graph.py'),
                  'parcolor.core.graph.parse_edge_list': ('core/graph.html#parse_edge_list', 'parcolor/core/graph.py'),
                  'parcolor.core.graph.parse_synthetic_spec': ('core/graph.html#parse_synthetic_spec', 'parcolor/core/graph.py'),
                  'parcolor.core.graph.serialize_edge_list': ('core/graph.html#serialize_edge_list', 'parcolor/core/graph.py')},
            'parcolor.core.partition': { 'parcolor.core.partition.Partitioning': ('core/partition.html#partitioning', 'parcolor/core/partition.py'),
                  'parcolor.core.partition.Partitioning.__post_init__': ('core/partition.html#partitioning.__post_init__', 'parcolor/core/partition.py'),
                  'parcolor.core.partition.Partitioning.block_range': ('core/partition.html#partitioning.block_range', 'parcolor/core/partition.py'),
                  'parcolor.core.partition.Partitioning.boundary_count': ('core/partition.html#partitioning.boundary_count', 'parcolor/core/partition.py'),
                  'parcolor.core.partition.Partitioning.boundary_of': ('core/partition.html#partitioning.boundary_of', 'parcolor/core/partition.py'),
                  'parcolor.core.partition.Partitioning.check_matches': ('core/partition.html#partitioning.check_matches', 'parcolor/core/partition.py'),
                  'parcolor.core.partition.Partitioning.contiguous': ('core/partition.html#partitioning.contiguous', 'parcolor/core/partition.py'),
                  'parcolor.core.partition.Partitioning.internal_of': ('core/partition.html#partitioning.internal_of', 'parcolor/core/partition.py'),
                  'parcolor.core.partition.Partitioning.n': ('core/partition.html#partitioning.n', 'parcolor/core/partition.py'),
                  'parcolor.core.partition._classify': ('core/partition.html#_classify', 'parcolor/core/partition.py'),
                  'parcolor.core.partition.partition_random': ('core/partition.html#partition_random', 'parcolor/core/partition.py'),
                  'parcolor.core.partition.partition_uniform': ('core/partition.html#partition_uniform', 'parcolor/core/partition.py')},
            'parcolor.core.protocols': { 'parcolor.core.protocols.AlgorithmInfo': ('core/protocols.html#algorithminfo', 'parcolor/core/protocols.py'),
                  'parcolor.core.protocols.AlgorithmRun': ('core/protocols.html#algorithmrun', 'parcolor/core/protocols.py'),
                  'parcolor.core.protocols.ColoringRunner': ('core/protocols.html#coloringrunner', 'parcolor/core/protocols.py'),
                  'parcolor.core.protocols.ColoringRunner.__call__': ('core/protocols.html#coloringrunner.__call__', 'parcolor/core/protocols.py')},
            'parcolor.parallel.barrier': { 'parcolor.parallel.barrier.BarrierColoring': ('parallel/barrier.html#barriercoloring', 'parcolor/parallel/barrier.py'),
                  'parcolor.parallel.barrier.BarrierColoring.__init__': ('parallel/barrier.html#barriercoloring.__init__', 'parcolor/parallel/barrier.py'),
                  'parcolor.parallel.barrier.BarrierColoring._close_round': ('parallel/barrier.html#barriercoloring._close_round', 'parcolor/parallel/barrier.py'),
                  'parcolor.parallel.barrier.BarrierColoring._detect_conflicts': ('parallel/barrier.html#barriercoloring._detect_conflicts', 'parcolor/parallel/barrier.py'),
                  'parcolor.parallel.barrier.BarrierColoring._mark': ('parallel/barrier.html#barriercoloring._mark', 'parcolor/parallel/barrier.py'),
                  'parcolor.parallel.barrier.BarrierColoring._tentative_color': ('parallel/barrier.html#barriercoloring._tentative_color', 'parcolor/parallel/barrier.py'),
                  'parcolor.parallel.barrier.BarrierColoring._worker': ('parallel/barrier.html#barriercoloring._worker', 'parcolor/parallel/barrier.py'),
                  'parcolor.parallel.barrier.BarrierColoring.run': ('parallel/barrier.html#barriercoloring.run', 'parcolor/parallel/barrier.py'),
                  'parcolor.parallel.barrier.PhaseMonitor': ('parallel/barrier.html#phasemonitor', 'parcolor/parallel/barrier.py'),
                  'parcolor.parallel.barrier.PhaseMonitor.__init__': ('parallel/barrier.html#phasemonitor.__init__', 'parcolor/parallel/barrier.py'),
                  'parcolor.parallel.barrier.PhaseMonitor.interleavings': ('parallel/barrier.html#phasemonitor.interleavings', 'parcolor/parallel/barrier.py'),
                  'parcolor.parallel.barrier.PhaseMonitor.record': ('parallel/barrier.html#phasemonitor.record', 'parcolor/parallel/barrier.py'),
                  'parcolor.parallel.barrier.RoundSnapshot': ('parallel/barrier.html#roundsnapshot', 'parcolor/parallel/barrier.py'),
                  'parcolor.parallel.barrier.RoundSnapshot.log_lines': ('parallel/barrier.html#roundsnapshot.log_lines', 'parcolor/parallel/barrier.py'),
                  'parcolor.parallel.barrier.RoundStats': ('parallel/barrier.html#roundstats', 'parcolor/parallel/barrier.py'),
                  'parcolor.parallel.barrier.ThreadState': ('parallel/barrier.html#threadstate', 'parcolor/parallel/barrier.py')},
            'parcolor.parallel.locks': { 'parcolor.parallel.locks.LockColoring': ('parallel/locks.html#lockcoloring', 'parcolor/parallel/locks.py'),
                  'parcolor.parallel.locks.LockColoring.__init__': ('parallel/locks.html#lockcoloring.__init__', 'parcolor/parallel/locks.py'),
                  'parcolor.parallel.locks.LockColoring._color': ('parallel/locks.html#lockcoloring._color', 'parcolor/parallel/locks.py'),
                  'parcolor.parallel.locks.LockColoring._worker': ('parallel/locks.html#lockcoloring._worker', 'parcolor/parallel/locks.py'),
                  'parcolor.parallel.locks.LockColoring.run': ('parallel/locks.html#lockcoloring.run', 'parcolor/parallel/locks.py'),
                  'parcolor.parallel.locks.LockTable': ('parallel/locks.html#locktable', 'parcolor/parallel/locks.py'),
                  'parcolor.parallel.locks.LockTable.__init__': ('parallel/locks.html#locktable.__init__', 'parcolor/parallel/locks.py'),
                  'parcolor.parallel.locks.LockTable._violation': ('parallel/locks.html#locktable._violation', 'parcolor/parallel/locks.py'),
                  'parcolor.parallel.locks.LockTable.acquire': ('parallel/locks.html#locktable.acquire', 'parcolor/parallel/locks.py'),
                  'parcolor.parallel.locks.LockTable.acquire_ordered': ('parallel/locks.html#locktable.acquire_ordered', 'parcolor/parallel/locks.py'),
                  'parcolor.parallel.locks.LockTable.held': ('parallel/locks.html#locktable.held', 'parcolor/parallel/locks.py'),
                  'parcolor.parallel.locks.LockTable.locked': ('parallel/locks.html#locktable.locked', 'parcolor/parallel/locks.py'),
                  'parcolor.parallel.locks.LockTable.release': ('parallel/locks.html#locktable.release', 'parcolor/parallel/locks.py'),
                  'parcolor.parallel.locks.LockTable.release_all': ('parallel/locks.html#locktable.release_all', 'parcolor/parallel/locks.py')},
            'parcolor.storage.file_storage': { 'parcolor.storage.file_storage.ResultStorage': ('storage/file_storage.html#resultstorage', 'parcolor/storage/file_storage.py'),
                  'parcolor.storage.file_storage.ResultStorage.__init__': ('storage/file_storage.html#resultstorage.__init__', 'parcolor/storage/file_storage.py'),
                  'parcolor.storage.file_storage.ResultStorage._generate_filename': ('storage/file_storage.html#resultstorage._generate_filename', 'parcolor/storage/file_storage.py'),
                  'parcolor.storage.file_storage.ResultStorage.list_results': ('storage/file_storage.html#resultstorage.list_results', 'parcolor/storage/file_storage.py'),
                  'parcolor.storage.file_storage.ResultStorage.load': ('storage/file_storage.html#resultstorage.load', 'parcolor/storage/file_storage.py'),
                  'parcolor.storage.file_storage.ResultStorage.results_directory': ('storage/file_storage.html#resultstorage.results_directory', 'parcolor/storage/file_storage.py'),
                  'parcolor.storage.file_storage.ResultStorage.save': ('storage/file_storage.html#resultstorage.save', 'parcolor/storage/file_storage.py'),
                  'parcolor.storage.file_storage.ResultStorage.save_coloring': ('storage/file_storage.html#resultstorage.save_coloring', 'parcolor/storage/file_storage.py')}}}
